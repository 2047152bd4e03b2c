//! Regeneration of the stabilizer classification tables.
//!
//! Each tabulated signature carries its canonical primitive idempotent
//! (all-plus factor signs). Rows are computed, never copied: the stabilizer,
//! its structure label and a minimal generating set are derived from the
//! factor list at run time. The expected_* fields hold the published
//! reference values the computation is checked against.

use crate::blade::{Blade, Sign};
use crate::error::Result;
use crate::fingerprint::fingerprint;
use crate::idempotent::{primitive_idempotent, CommutingSet};
use crate::signature::Signature;
use crate::structure::{classify, RingType};
use crate::vee::stabilizer;
use serde::{Deserialize, Serialize};

/// Table classes: 1 simple real, 2 simple complex, 3 simple quaternionic,
/// 4 semisimple real, 5 semisimple quaternionic.
pub fn table_class(sig: Signature) -> Option<u8> {
    if sig.dim() == 0 {
        return Some(1);
    }
    Some(match classify(sig).ring_type {
        RingType::Real => 1,
        RingType::Complex => 2,
        RingType::Quaternion => 3,
        RingType::DoubleReal => 4,
        RingType::DoubleQuaternion => 5,
    })
}

/// One tabulated signature: canonical factors plus reference values.
#[derive(Debug, Clone, Copy)]
pub struct TableEntry {
    pub p: u32,
    pub q: u32,
    pub class: u8,
    pub factors: &'static [&'static [u32]],
    pub expected_order: u64,
    pub expected_label: &'static str,
    /// Reference generator-order multiset, ascending.
    pub expected_gen_orders: &'static [u32],
}

macro_rules! row {
    ($p:expr, $q:expr, $class:expr, [$([$($i:expr),*]),*], $order:expr, $label:expr, [$($o:expr),*]) => {
        TableEntry {
            p: $p,
            q: $q,
            class: $class,
            factors: &[$(&[$($i),*]),*],
            expected_order: $order,
            expected_label: $label,
            expected_gen_orders: &[$($o),*],
        }
    };
}

pub const TABLE_ENTRIES: &[TableEntry] = &[
    // Class 1: Mat(2^k, R)
    row!(1, 1, 1, [[1, 2]], 4, "(Z2)^2", [2, 2]),
    row!(2, 0, 1, [[1]], 4, "(Z2)^2", [2, 2]),
    row!(2, 2, 1, [[1, 3], [2, 4]], 8, "(Z2)^3", [2, 2, 2]),
    row!(3, 1, 1, [[1], [3, 4]], 8, "(Z2)^3", [2, 2, 2]),
    row!(
        0,
        6,
        1,
        [[1, 2, 3], [1, 4, 6], [3, 4, 5]],
        16,
        "(Z2)^4",
        [2, 2, 2, 2]
    ),
    row!(
        3,
        3,
        1,
        [[1, 4], [2, 5], [3, 6]],
        16,
        "(Z2)^4",
        [2, 2, 2, 2]
    ),
    row!(4, 2, 1, [[1], [3, 5], [4, 6]], 16, "(Z2)^4", [2, 2, 2, 2]),
    row!(
        0,
        8,
        1,
        [[1, 2, 3], [1, 4, 6], [3, 4, 5], [3, 6, 7]],
        32,
        "(Z2)^5",
        [2, 2, 2, 2, 2]
    ),
    row!(
        1,
        7,
        1,
        [[1, 8], [2, 3, 4], [2, 5, 7], [4, 5, 6]],
        32,
        "(Z2)^5",
        [2, 2, 2, 2, 2]
    ),
    row!(
        4,
        4,
        1,
        [[1, 5], [2, 6], [3, 7], [4, 8]],
        32,
        "(Z2)^5",
        [2, 2, 2, 2, 2]
    ),
    row!(
        5,
        3,
        1,
        [[1], [3, 6], [4, 7], [5, 8]],
        32,
        "(Z2)^5",
        [2, 2, 2, 2, 2]
    ),
    row!(
        8,
        0,
        1,
        [[1], [2, 3, 4, 5], [2, 4, 6, 8], [4, 5, 6, 7]],
        32,
        "(Z2)^5",
        [2, 2, 2, 2, 2]
    ),
    // Class 2: Mat(2^k, C)
    row!(1, 2, 2, [[1, 3]], 8, "Z2 x Z4", [2, 4]),
    row!(3, 0, 2, [[1]], 8, "Z2 x Z4", [2, 4]),
    row!(
        0,
        5,
        2,
        [[1, 2, 3], [3, 4, 5]],
        16,
        "(Z2)^2 x Z4",
        [4, 4, 4]
    ),
    row!(2, 3, 2, [[1, 4], [2, 5]], 16, "(Z2)^2 x Z4", [2, 2, 4]),
    row!(4, 1, 2, [[1], [4, 5]], 16, "(Z2)^2 x Z4", [2, 2, 4]),
    row!(
        1,
        6,
        2,
        [[1, 7], [2, 3, 4], [4, 5, 6]],
        32,
        "(Z2)^3 x Z4",
        [2, 4, 4, 4]
    ),
    row!(
        3,
        4,
        2,
        [[1, 5], [2, 6], [3, 7]],
        32,
        "(Z2)^3 x Z4",
        [2, 2, 2, 4]
    ),
    row!(
        5,
        2,
        2,
        [[1], [4, 6], [5, 7]],
        32,
        "(Z2)^3 x Z4",
        [2, 2, 2, 4]
    ),
    row!(
        7,
        0,
        2,
        [[1], [2, 3, 4, 5], [4, 5, 6, 7]],
        32,
        "(Z2)^3 x Z4",
        [2, 4, 4, 4]
    ),
    row!(
        0,
        9,
        2,
        [[1, 2, 3], [1, 4, 6], [3, 4, 5], [3, 6, 7]],
        64,
        "(Z2)^4 x Z4",
        [2, 2, 2, 2, 4]
    ),
    row!(
        2,
        7,
        2,
        [[1, 8], [2, 9], [3, 4, 5], [5, 6, 7]],
        64,
        "(Z2)^4 x Z4",
        [2, 2, 4, 4, 4]
    ),
    row!(
        4,
        5,
        2,
        [[1, 6], [2, 7], [3, 8], [4, 9]],
        64,
        "(Z2)^4 x Z4",
        [2, 2, 2, 2, 4]
    ),
    row!(
        6,
        3,
        2,
        [[1], [4, 7], [5, 8], [6, 9]],
        64,
        "(Z2)^4 x Z4",
        [2, 2, 2, 2, 4]
    ),
    row!(
        8,
        1,
        2,
        [[1], [8, 9], [2, 3, 4, 5], [4, 5, 6, 7]],
        64,
        "(Z2)^4 x Z4",
        [2, 2, 4, 4, 4]
    ),
    // Class 3: Mat(2^k, H)
    row!(0, 4, 3, [[1, 2, 3]], 16, "F3", [4, 4, 4]),
    row!(1, 3, 3, [[1, 4]], 16, "F2 x Z2", [2, 4, 4]),
    row!(4, 0, 3, [[1]], 16, "F2 x Z2", [2, 4, 4]),
    row!(1, 5, 3, [[1, 6], [2, 3, 4]], 32, "F3 x Z2", [2, 4, 4, 4]),
    row!(2, 4, 3, [[1, 5], [2, 6]], 32, "F2 x (Z2)^2", [2, 2, 4, 4]),
    row!(5, 1, 3, [[1], [5, 6]], 32, "F2 x (Z2)^2", [2, 2, 4, 4]),
    row!(6, 0, 3, [[1], [2, 3, 4, 5]], 32, "F3 x Z2", [2, 4, 4, 4]),
    row!(
        2,
        6,
        3,
        [[1, 7], [2, 8], [3, 4, 5]],
        64,
        "F3 x (Z2)^2",
        [2, 2, 4, 4, 4]
    ),
    row!(
        3,
        5,
        3,
        [[1, 6], [2, 7], [3, 8]],
        64,
        "F2 x (Z2)^3",
        [2, 2, 2, 4, 4]
    ),
    row!(
        6,
        2,
        3,
        [[1], [5, 7], [6, 8]],
        64,
        "F2 x (Z2)^3",
        [2, 2, 2, 4, 4]
    ),
    row!(
        7,
        1,
        3,
        [[1], [7, 8], [2, 3, 4, 5]],
        64,
        "F3 x (Z2)^2",
        [2, 2, 4, 4, 4]
    ),
    // Class 4: Mat(2^(k-1), R) + Mat(2^(k-1), R)
    row!(2, 1, 4, [[1], [2, 3]], 8, "(Z2)^3", [2, 2, 2]),
    row!(3, 2, 4, [[1], [2, 4], [3, 5]], 16, "(Z2)^4", [2, 2, 2, 2]),
    row!(
        0,
        7,
        4,
        [[1, 2, 3], [1, 4, 6], [3, 4, 5], [3, 6, 7]],
        32,
        "(Z2)^5",
        [2, 2, 2, 2, 2]
    ),
    row!(
        4,
        3,
        4,
        [[1], [2, 5], [3, 6], [4, 7]],
        32,
        "(Z2)^5",
        [2, 2, 2, 2, 2]
    ),
    row!(
        5,
        4,
        4,
        [[1], [2, 6], [3, 7], [4, 8], [5, 9]],
        64,
        "(Z2)^6",
        [2, 2, 2, 2, 2, 2]
    ),
    row!(
        9,
        0,
        4,
        [[1], [2, 3, 4, 5], [2, 3, 6, 7], [2, 3, 8, 9], [2, 4, 6, 8]],
        64,
        "(Z2)^6",
        [2, 2, 2, 2, 2, 2]
    ),
    row!(
        1,
        8,
        4,
        [[1], [2, 3, 4, 5], [2, 3, 6, 7], [2, 3, 8, 9], [2, 4, 6, 8]],
        64,
        "(Z2)^6",
        [2, 2, 2, 2, 2, 2]
    ),
    // Class 5: Mat(2^(k-1), H) + Mat(2^(k-1), H)
    row!(0, 3, 5, [[1, 2, 3]], 16, "F3", [4, 4, 4]),
    row!(5, 0, 5, [[1], [2, 3, 4, 5]], 32, "F3 x Z2", [2, 4, 4, 4]),
    row!(1, 4, 5, [[1, 5], [2, 3, 4]], 32, "F3 x Z2", [2, 4, 4, 4]),
    row!(
        2,
        5,
        5,
        [[1, 6], [2, 7], [3, 4, 5]],
        64,
        "F3 x (Z2)^2",
        [2, 2, 4, 4, 4]
    ),
    row!(
        6,
        1,
        5,
        [[1], [6, 7], [2, 3, 4, 5]],
        64,
        "F3 x (Z2)^2",
        [2, 2, 4, 4, 4]
    ),
    row!(
        7,
        2,
        5,
        [[1], [2, 8], [3, 9], [4, 5, 6, 7]],
        128,
        "F3 x (Z2)^3",
        [2, 2, 2, 4, 4, 4]
    ),
    row!(
        3,
        6,
        5,
        [[1], [2, 4], [3, 5], [6, 7, 8, 9]],
        128,
        "F3 x (Z2)^3",
        [2, 2, 2, 4, 4, 4]
    ),
];

/// A computed table row, serializable to text, CSV and JSON losslessly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub p: u32,
    pub q: u32,
    pub idempotent: String,
    pub stab_order: u64,
    pub label: String,
    pub gen_orders: Vec<u32>,
    pub generators: Vec<String>,
}

impl TableRow {
    pub fn gen_order_multiset(&self) -> Vec<u32> {
        let mut v = self.gen_orders.clone();
        v.sort_unstable();
        v
    }
}

pub fn format_factors(factors: &CommutingSet, signs: &[Sign]) -> String {
    factors
        .blades()
        .iter()
        .zip(signs)
        .map(|(b, s)| format!("{s}{b}"))
        .collect::<Vec<_>>()
        .join(",")
}

/// Compute the row for a tabulated signature from its canonical factors.
pub fn generate_row(entry: &TableEntry) -> Result<TableRow> {
    let sig = Signature::new(entry.p, entry.q);
    let blades: Vec<Blade> = entry
        .factors
        .iter()
        .map(|ix| Blade::from_indices(ix))
        .collect();
    let factors = CommutingSet::new(sig, blades)?;
    let signs = vec![Sign::Plus; factors.len()];
    let f = primitive_idempotent(&factors, &signs)?;
    let stab = stabilizer(&f);
    let fp = fingerprint(&stab);
    Ok(TableRow {
        p: entry.p,
        q: entry.q,
        idempotent: format_factors(&factors, &signs),
        stab_order: stab.order() as u64,
        label: fp.label.to_string(),
        gen_orders: fp.generator_orders,
        generators: stab.generators().iter().map(|g| g.to_string()).collect(),
    })
}

pub fn entries_for_class(class: u8) -> Vec<&'static TableEntry> {
    TABLE_ENTRIES.iter().filter(|e| e.class == class).collect()
}

pub fn generate_table(class: u8) -> Result<Vec<TableRow>> {
    entries_for_class(class)
        .into_iter()
        .map(generate_row)
        .collect()
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn rows_to_csv(rows: &[TableRow]) -> String {
    let mut out = String::from("p,q,idempotent,stab_order,label,gen_orders\n");
    for r in rows {
        let orders: Vec<String> = r.gen_orders.iter().map(|o| o.to_string()).collect();
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.p,
            r.q,
            csv_field(&r.idempotent),
            r.stab_order,
            csv_field(&r.label),
            orders.join(";")
        ));
    }
    out
}

pub fn rows_to_json(rows: &[TableRow]) -> String {
    serde_json::to_string_pretty(rows).expect("table rows serialize")
}

pub fn rows_to_text(class: u8, rows: &[TableRow]) -> String {
    let mut out = String::new();
    let title = match class {
        1 => "Table 1: stabilizers in Mat(2^k, R) algebras",
        2 => "Table 2: stabilizers in Mat(2^k, C) algebras",
        3 => "Table 3: stabilizers in Mat(2^k, H) algebras",
        4 => "Table 4: stabilizers in Mat(2^(k-1), R)^2 algebras",
        5 => "Table 5: stabilizers in Mat(2^(k-1), H)^2 algebras",
        _ => "Table",
    };
    out.push_str(title);
    out.push('\n');
    out.push_str(&format!(
        "{:<9} {:<34} {:>6}  {:<14} {:<18} {}\n",
        "Cl(p,q)", "idempotent factors", "|G(f)|", "structure", "|g|", "generators"
    ));
    for r in rows {
        let orders: Vec<String> = r.gen_orders.iter().map(|o| o.to_string()).collect();
        out.push_str(&format!(
            "{:<9} {:<34} {:>6}  {:<14} {:<18} {}\n",
            format!("Cl({},{})", r.p, r.q),
            r.idempotent,
            r.stab_order,
            r.label,
            format!("({})", orders.join(",")),
            r.generators.join(", ")
        ));
    }
    out
}
