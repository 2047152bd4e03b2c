use clap::{Parser, Subcommand, ValueEnum};
use cliffalg::{
    blade_matrices, examples_suite, props_suite, tables_suite, CommutingSet, Error, Multivector,
    Sign, Signature, SignedBlade, SpinorBasis, TableRow,
};
use std::fmt::Write as _;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "cliffalg",
    about = "Exact computations in real Clifford algebras: idempotents, vee group stabilizers, spinor representations",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Regenerate the stabilizer classification tables
    Tables {
        /// Table class 1-5, or "all"
        class: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Matrix of an element in the spinor representation, next to the matrix
    /// of its transposition image
    Rep {
        /// Signature as "p,q"
        #[arg(long)]
        signature: String,
        /// Element expression in the blade grammar, or "generic"
        element: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Replay a specific idempotent: comma-separated signed factors,
        /// e.g. "+e13,+e24"
        #[arg(long)]
        idempotent: Option<String>,
        /// Guard for the verified dimension range
        #[arg(long, default_value_t = 9)]
        max_dim: u32,
    },
    /// Run a verification suite
    Verify {
        /// Signature as "p,q", or "all"
        #[arg(long, default_value = "all")]
        signature: String,
        /// Which suite to run
        suite: Suite,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest dimension n = p + q included in "all" sweeps
        #[arg(long, default_value_t = 9)]
        max_dim: u32,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Props,
    Tables,
    Examples,
}

fn parse_signature(s: &str, max_dim: u32) -> Result<Signature, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(format!("expected \"p,q\", got \"{s}\""));
    }
    let p: u32 = parts[0]
        .trim()
        .parse()
        .map_err(|_| format!("bad p in \"{s}\""))?;
    let q: u32 = parts[1]
        .trim()
        .parse()
        .map_err(|_| format!("bad q in \"{s}\""))?;
    if p + q > max_dim {
        return Err(format!(
            "Cl({p},{q}) is outside the verified range n <= {max_dim}; raise --max-dim to proceed"
        ));
    }
    Ok(Signature::new(p, q))
}

fn parse_idempotent(factors: &str, sig: Signature) -> Result<(CommutingSet, Vec<Sign>), Error> {
    let mut blades = Vec::new();
    let mut signs = Vec::new();
    for part in factors.split(',') {
        let sb = SignedBlade::parse(part.trim(), sig)?;
        blades.push(sb.blade);
        signs.push(sb.sign);
    }
    let cs = CommutingSet::new(sig, blades)?;
    Ok((cs, signs))
}

fn usage_err(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

/// Write without panicking on a closed pipe.
fn emit(s: &str) {
    use std::io::Write;
    let _ = std::io::stdout().write_all(s.as_bytes());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Tables { class, format } => run_tables(&class, format),
        Command::Rep {
            signature,
            element,
            format,
            idempotent,
            max_dim,
        } => run_rep(&signature, &element, format, idempotent.as_deref(), max_dim),
        Command::Verify {
            signature,
            suite,
            seed,
            max_dim,
        } => run_verify(&signature, suite, seed, max_dim),
    }
}

fn run_tables(class: &str, format: Format) -> ExitCode {
    let classes: Vec<u8> = if class == "all" {
        vec![1, 2, 3, 4, 5]
    } else {
        match class.parse::<u8>() {
            Ok(c) if (1..=5).contains(&c) => vec![c],
            _ => {
                return usage_err(format!(
                    "table class must be 1-5 or \"all\", got \"{class}\""
                ))
            }
        }
    };
    let mut out = String::new();
    let mut all_rows: Vec<TableRow> = Vec::new();
    for c in &classes {
        match cliffalg::generate_table(*c) {
            Ok(mut rows) => {
                if format == Format::Text {
                    out.push_str(&cliffalg::tables::rows_to_text(*c, &rows));
                    out.push('\n');
                }
                all_rows.append(&mut rows);
            }
            Err(e) => return usage_err(e),
        }
    }
    match format {
        Format::Text => {}
        Format::Csv => out.push_str(&cliffalg::tables::rows_to_csv(&all_rows)),
        Format::Json => {
            out.push_str(&cliffalg::tables::rows_to_json(&all_rows));
            out.push('\n');
        }
    }
    emit(&out);
    ExitCode::SUCCESS
}

fn basis_for(sig: Signature, idempotent: Option<&str>) -> Result<SpinorBasis, Error> {
    let f = match idempotent {
        Some(factors) => {
            let (cs, signs) = parse_idempotent(factors, sig)?;
            cliffalg::primitive_idempotent(&cs, &signs)?
        }
        None => cliffalg::canonical_idempotent(sig)?,
    };
    SpinorBasis::new(f)
}

fn run_rep(
    signature: &str,
    element: &str,
    format: Format,
    idempotent: Option<&str>,
    max_dim: u32,
) -> ExitCode {
    let sig = match parse_signature(signature, max_dim) {
        Ok(s) => s,
        Err(e) => return usage_err(e),
    };
    let basis = match basis_for(sig, idempotent) {
        Ok(b) => b,
        Err(e) => return usage_err(e),
    };
    if element == "generic" {
        return print_generic(&basis, format);
    }
    let u = match Multivector::parse(element, sig) {
        Ok(u) => u,
        Err(e) => return usage_err(e),
    };
    let rep = |x: &Multivector| {
        if basis.structure().simple {
            basis.rep_matrix(x)
        } else {
            basis.semisimple_rep_matrix(x)
        }
    };
    let (m, mt) = match (rep(&u), rep(&u.transposition())) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return usage_err(e),
    };
    let adjoint_ok = mt == m.adjoint();
    let relation = match sig.p_minus_q_mod8() {
        0 | 1 | 2 => "transposition",
        3 | 7 => "complex Hermitian conjugation",
        _ => "quaternionic Hermitian conjugation",
    };

    let mut out = String::new();
    match format {
        Format::Text => {
            out.push_str(&header_text(&basis));
            let _ = writeln!(out, "u      = {u}");
            let _ = writeln!(out, "T(u)   = {}", u.transposition());
            let _ = writeln!(out);
            let _ = writeln!(out, "[u]:");
            let _ = write!(out, "{m}");
            let _ = writeln!(out);
            let _ = writeln!(out, "[T(u)]:");
            let _ = write!(out, "{mt}");
            let _ = writeln!(out);
            let _ = writeln!(
                out,
                "adjoint relation ({relation}): [T(u)] == adjoint([u]) is {}",
                if adjoint_ok { "satisfied" } else { "VIOLATED" }
            );
        }
        Format::Json => {
            let val = serde_json::json!({
                "signature": { "p": sig.p, "q": sig.q },
                "structure": basis.structure().to_string(),
                "idempotent": basis.idempotent().value().to_string(),
                "transversal": basis.transversal().reps.iter().map(|b| b.to_string()).collect::<Vec<_>>(),
                "k_basis": basis.kbasis().monomials().iter().map(|b| b.to_string()).collect::<Vec<_>>(),
                "element": u.to_string(),
                "matrix": matrix_cells(&basis, &m),
                "transposed_matrix": matrix_cells(&basis, &mt),
                "adjoint_relation": relation,
                "adjoint_ok": adjoint_ok,
            });
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&val).unwrap());
        }
        Format::Csv => {
            let _ = writeln!(out, "row,col,entry,t_entry");
            for r in 0..m.dim() {
                for c in 0..m.dim() {
                    let _ = writeln!(
                        out,
                        "{r},{c},{},{}",
                        csv_quote(&cell_text(&basis, &m, r, c)),
                        csv_quote(&cell_text(&basis, &mt, r, c))
                    );
                }
            }
        }
    }
    emit(&out);
    if adjoint_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn csv_quote(s: &str) -> String {
    if s.contains(',') || s.contains('"') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn cell_text(basis: &SpinorBasis, m: &cliffalg::RepMatrix, r: usize, c: usize) -> String {
    let kb = basis.kbasis();
    match m.hat_entry(r, c) {
        Some(h) => format!(
            "[{}, {}]",
            kb.format_element(m.entry(r, c)),
            kb.format_element(h)
        ),
        None => kb.format_element(m.entry(r, c)),
    }
}

fn matrix_cells(basis: &SpinorBasis, m: &cliffalg::RepMatrix) -> Vec<Vec<String>> {
    (0..m.dim())
        .map(|r| (0..m.dim()).map(|c| cell_text(basis, m, r, c)).collect())
        .collect()
}

fn header_text(basis: &SpinorBasis) -> String {
    let sig = basis.signature();
    let s = basis.structure();
    let mut out = String::new();
    let _ = writeln!(out, "{sig} = {s}   (k = {}, N = {})", s.k, s.matrix_dim);
    let _ = writeln!(out, "f = {}", basis.idempotent().value());
    let reps: Vec<String> = basis
        .transversal()
        .reps
        .iter()
        .map(|b| b.to_string())
        .collect();
    let _ = writeln!(out, "transversal M = [{}]", reps.join(", "));
    let kb: Vec<String> = basis
        .kbasis()
        .monomials()
        .iter()
        .map(|b| b.to_string())
        .collect();
    let _ = writeln!(out, "K basis = [{}]  ({})", kb.join(", "), s.ring_type);
    let _ = writeln!(out);
    out
}

/// Symbolic-shape output: the matrix of a generic element with named
/// placeholder coordinates u1..u2^n, printed as linear forms.
fn print_generic(basis: &SpinorBasis, format: Format) -> ExitCode {
    let matrices = match blade_matrices(basis) {
        Ok(m) => m,
        Err(e) => return usage_err(e),
    };
    let n = basis.dim();
    let kb = basis.kbasis();
    let unit_names = ["", "i", "j", "k"];
    let components = if basis.structure().simple { 1 } else { 2 };
    let mut cells: Vec<Vec<Vec<String>>> = Vec::with_capacity(components);
    for comp in 0..components {
        let mut grid = vec![vec![String::new(); n]; n];
        for (r, row) in grid.iter_mut().enumerate() {
            for (c, cell) in row.iter_mut().enumerate() {
                let mut unit_terms: Vec<String> = Vec::new();
                for (unit, name) in unit_names.iter().enumerate().take(kb.dim()) {
                    let mut parts: Vec<String> = Vec::new();
                    for (t, bm) in matrices.iter().enumerate() {
                        let e = if comp == 0 {
                            bm.entry(r, c).coords()[unit].clone()
                        } else {
                            bm.hat_entry(r, c).unwrap().coords()[unit].clone()
                        };
                        if e == cliffalg::rat_int(0) {
                            continue;
                        }
                        let var = format!("u{}", t + 1);
                        let term = if e == cliffalg::rat_int(1) {
                            var
                        } else if e == cliffalg::rat_int(-1) {
                            format!("-{var}")
                        } else {
                            format!("{e}*{var}")
                        };
                        if parts.is_empty() {
                            parts.push(term);
                        } else if let Some(stripped) = term.strip_prefix('-') {
                            parts.push(format!("- {stripped}"));
                        } else {
                            parts.push(format!("+ {term}"));
                        }
                    }
                    if parts.is_empty() {
                        continue;
                    }
                    let body = parts.join(" ");
                    if name.is_empty() {
                        unit_terms.push(format!("({body})"));
                    } else {
                        unit_terms.push(format!("({body}){name}"));
                    }
                }
                *cell = if unit_terms.is_empty() {
                    "0".to_string()
                } else {
                    unit_terms.join(" + ")
                };
            }
        }
        cells.push(grid);
    }

    let mut out = String::new();
    match format {
        Format::Json => {
            let val = serde_json::json!({
                "signature": { "p": basis.signature().p, "q": basis.signature().q },
                "structure": basis.structure().to_string(),
                "coordinates": "u1..u2^n against the monomial order",
                "matrix": cells[0],
                "hat_matrix": if components == 2 { Some(&cells[1]) } else { None },
            });
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&val).unwrap());
        }
        _ => {
            out.push_str(&header_text(basis));
            let _ = writeln!(
                out,
                "generic u = u1*1 + u2*e1 + ... over the monomial order"
            );
            for (comp, grid) in cells.iter().enumerate() {
                if components == 2 {
                    let _ = writeln!(
                        out,
                        "{} component:",
                        if comp == 0 { "ideal" } else { "hat ideal" }
                    );
                }
                let width = grid.iter().flatten().map(|s| s.len()).max().unwrap_or(1);
                for row in grid {
                    let _ = write!(out, "[ ");
                    for (c, cell) in row.iter().enumerate() {
                        if c > 0 {
                            let _ = write!(out, "  ");
                        }
                        let _ = write!(out, "{cell:>width$}");
                    }
                    let _ = writeln!(out, " ]");
                }
            }
        }
    }
    emit(&out);
    ExitCode::SUCCESS
}

fn run_verify(signature: &str, suite: Suite, seed: u64, max_dim: u32) -> ExitCode {
    let result = match suite {
        Suite::Props => {
            if signature == "all" {
                let mut checks = Vec::new();
                let mut err = None;
                'outer: for n in 0..=max_dim {
                    for p in 0..=n {
                        let sig = Signature::new(p, n - p);
                        match props_suite(sig, seed) {
                            Ok(mut c) => {
                                for x in &mut c {
                                    x.name = format!("{sig} {}", x.name);
                                }
                                checks.extend(c);
                            }
                            Err(e) => {
                                err = Some(e.to_string());
                                break 'outer;
                            }
                        }
                    }
                }
                match err {
                    Some(e) => Err(e),
                    None => Ok(checks),
                }
            } else {
                parse_signature(signature, max_dim)
                    .and_then(|sig| props_suite(sig, seed).map_err(|e| e.to_string()))
            }
        }
        Suite::Tables => {
            if signature == "all" {
                tables_suite(None).map_err(|e| e.to_string())
            } else {
                match parse_signature(signature, max_dim) {
                    Ok(sig) => {
                        let listed = cliffalg::TABLE_ENTRIES
                            .iter()
                            .any(|e| e.p == sig.p && e.q == sig.q);
                        if !listed {
                            return usage_err(format!("{sig} has no tabulated row"));
                        }
                        tables_suite(None)
                            .map(|checks| {
                                checks
                                    .into_iter()
                                    .filter(|c| c.name.ends_with(&sig.to_string()))
                                    .collect()
                            })
                            .map_err(|e| e.to_string())
                    }
                    Err(e) => return usage_err(e),
                }
            }
        }
        Suite::Examples => {
            if signature == "all" {
                let mut checks = Vec::new();
                let mut err = None;
                for (p, q) in [(2u32, 2u32), (3, 0), (2, 4), (2, 1)] {
                    match examples_suite(Signature::new(p, q), seed) {
                        Ok(c) => checks.extend(c),
                        Err(e) => {
                            err = Some(e.to_string());
                            break;
                        }
                    }
                }
                match err {
                    Some(e) => Err(e),
                    None => Ok(checks),
                }
            } else {
                parse_signature(signature, max_dim)
                    .and_then(|sig| examples_suite(sig, seed).map_err(|e| e.to_string()))
            }
        }
    };
    match result {
        Ok(checks) => {
            emit(&cliffalg::render_report(&checks));
            if cliffalg::all_passed(&checks) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => usage_err(e),
    }
}
