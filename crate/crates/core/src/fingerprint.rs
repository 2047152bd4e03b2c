//! Structure labels for stabilizer subgroups.
//!
//! Abelian subgroups of a vee group contain at most one Z4 elementary
//! divisor, because every order-4 element squares to the same central -1.
//! Non-abelian stabilizers decompose as a quaternion-type core F2 (two
//! anticommuting order-4 generators, order 8) or F3 (three pairwise
//! anticommuting order-4 generators, order 16) times a central elementary
//! abelian complement. Labels are certified constructively from an explicit
//! generating set, never by abstract isomorphism testing.

use crate::blade::SignedBlade;
use crate::signature::Signature;
use crate::vee::Subgroup;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum StructureLabel {
    /// (Z2)^rank
    ElementaryAbelian {
        rank: u32,
    },
    /// (Z2)^z2_rank x Z4
    AbelianWithZ4 {
        z2_rank: u32,
    },
    /// F2 x (Z2)^complement
    F2 {
        complement: u32,
    },
    /// F3 x (Z2)^complement
    F3 {
        complement: u32,
    },
    Unresolved,
}

impl fmt::Display for StructureLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn z2(f: &mut fmt::Formatter<'_>, rank: u32) -> fmt::Result {
            match rank {
                1 => write!(f, "Z2"),
                r => write!(f, "(Z2)^{r}"),
            }
        }
        match self {
            StructureLabel::ElementaryAbelian { rank } => {
                if *rank == 0 {
                    write!(f, "1")
                } else {
                    z2(f, *rank)
                }
            }
            StructureLabel::AbelianWithZ4 { z2_rank } => {
                if *z2_rank == 0 {
                    write!(f, "Z4")
                } else {
                    z2(f, *z2_rank)?;
                    write!(f, " x Z4")
                }
            }
            StructureLabel::F2 { complement } => {
                write!(f, "F2")?;
                if *complement > 0 {
                    write!(f, " x ")?;
                    z2(f, *complement)?;
                }
                Ok(())
            }
            StructureLabel::F3 { complement } => {
                write!(f, "F3")?;
                if *complement > 0 {
                    write!(f, " x ")?;
                    z2(f, *complement)?;
                }
                Ok(())
            }
            StructureLabel::Unresolved => write!(f, "UNRESOLVED"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupFingerprint {
    pub order: usize,
    pub abelian: bool,
    pub element_order_histogram: BTreeMap<u32, usize>,
    pub center_size: usize,
    pub generator_orders: Vec<u32>,
    pub label: StructureLabel,
}

impl GroupFingerprint {
    /// Generator orders as a sorted multiset.
    pub fn order_multiset(&self) -> Vec<u32> {
        let mut v = self.generator_orders.clone();
        v.sort_unstable();
        v
    }
}

fn log2(n: usize) -> u32 {
    debug_assert!(n.is_power_of_two());
    n.trailing_zeros()
}

/// Check that `quad` realizes the F2/F3 presentation and that the remaining
/// generators form a central elementary abelian direct complement.
fn certify_quaternion_core(
    sig: Signature,
    group: &Subgroup,
    quad: &[SignedBlade],
    rest: &[SignedBlade],
) -> Option<StructureLabel> {
    let core_order = match quad.len() {
        2 => 8,
        3 => 16,
        _ => return None,
    };
    for (i, a) in quad.iter().enumerate() {
        if a.order(sig) != 4 {
            return None;
        }
        for b in &quad[i + 1..] {
            let ab = a.mul(*b, sig);
            let ba = b.mul(*a, sig);
            if ab != -ba {
                return None;
            }
        }
    }
    let core = Subgroup::generated_by(sig, quad);
    if core.order() != core_order {
        return None;
    }
    for c in rest {
        if c.order(sig) != 2 {
            return None;
        }
        // Central in the whole subgroup.
        if !group.members().all(|m| c.blade.commutes_with(m.blade)) {
            return None;
        }
    }
    let complement = Subgroup::generated_by(sig, rest);
    if complement.order() != 1 << rest.len() {
        return None;
    }
    if complement
        .members()
        .any(|c| *c != SignedBlade::ONE && core.contains(*c))
    {
        return None;
    }
    if core.order() * complement.order() != group.order() {
        return None;
    }
    let m = rest.len() as u32;
    Some(if quad.len() == 3 {
        StructureLabel::F3 { complement: m }
    } else {
        StructureLabel::F2 { complement: m }
    })
}

/// Fall back to an exhaustive search for a certified quaternion-core
/// decomposition when the canonical generating set does not expose one.
fn search_quaternion_core(sig: Signature, group: &Subgroup) -> Option<StructureLabel> {
    let order4: Vec<SignedBlade> = group
        .positive_blades()
        .into_iter()
        .map(SignedBlade::positive)
        .filter(|g| g.order(sig) == 4)
        .collect();
    let centrals: Vec<SignedBlade> = group
        .positive_blades()
        .into_iter()
        .map(SignedBlade::positive)
        .filter(|g| g.order(sig) == 2 && group.members().all(|m| g.blade.commutes_with(m.blade)))
        .collect();
    fn combos(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in 0..n {
            for mut rest in combos(n, k - 1) {
                if rest.iter().all(|&r| r > first) {
                    let mut v = vec![first];
                    v.append(&mut rest);
                    out.push(v);
                }
            }
        }
        out
    }
    for want in [3usize, 2] {
        for combo in combos(order4.len(), want) {
            let quad: Vec<SignedBlade> = combo.iter().map(|&i| order4[i]).collect();
            // Greedy complement from central involutions.
            let mut rest: Vec<SignedBlade> = Vec::new();
            let core = Subgroup::generated_by(sig, &quad);
            if core.order() != if want == 3 { 16 } else { 8 } {
                continue;
            }
            let mut span = core.clone();
            for c in &centrals {
                if !span.contains(*c) {
                    rest.push(*c);
                    let mut gens = quad.clone();
                    gens.extend(rest.iter().copied());
                    span = Subgroup::generated_by(sig, &gens);
                }
            }
            if span.order() == group.order() {
                if let Some(label) = certify_quaternion_core(sig, group, &quad, &rest) {
                    return Some(label);
                }
            }
        }
    }
    None
}

/// Fingerprint a 2-subgroup of the vee group: order statistics plus a
/// certified structure label read off the canonical generating set.
pub fn fingerprint(group: &Subgroup) -> GroupFingerprint {
    let sig = group.signature();
    let mut histogram: BTreeMap<u32, usize> = BTreeMap::new();
    for g in group.members() {
        *histogram.entry(g.order(sig)).or_insert(0) += 1;
    }
    let abelian = group.is_abelian();
    let order = group.order();
    let generator_orders: Vec<u32> = group.generators().iter().map(|g| g.order(sig)).collect();

    let label = if abelian {
        let square_roots_of_one: usize =
            histogram.get(&1).copied().unwrap_or(0) + histogram.get(&2).copied().unwrap_or(0);
        let m = log2(order);
        if square_roots_of_one == order {
            StructureLabel::ElementaryAbelian { rank: m }
        } else {
            // (Z2)^a x (Z4)^b with a + 2b = m and a + b counting involutions;
            // b is always 1 here since all order-4 elements share one square.
            let b = m - log2(square_roots_of_one);
            debug_assert_eq!(b, 1);
            StructureLabel::AbelianWithZ4 { z2_rank: m - 2 * b }
        }
    } else {
        let quad: Vec<SignedBlade> = group
            .generators()
            .iter()
            .copied()
            .filter(|g| g.order(sig) == 4)
            .collect();
        let rest: Vec<SignedBlade> = group
            .generators()
            .iter()
            .copied()
            .filter(|g| g.order(sig) != 4)
            .collect();
        certify_quaternion_core(sig, group, &quad, &rest)
            .or_else(|| search_quaternion_core(sig, group))
            .unwrap_or(StructureLabel::Unresolved)
    };

    GroupFingerprint {
        order,
        abelian,
        element_order_histogram: histogram,
        center_size: group.center_size(),
        generator_orders,
        label,
    }
}
