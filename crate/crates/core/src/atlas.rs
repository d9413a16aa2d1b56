//! Renderings of classified maps: CSV rows, markdown tables, and a compact
//! grouped view that lines up with tables of types and genera.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::construct::Variant;
use crate::mapcore::{classify, ClassifyError, RegularMapRecord, CSV_HEADER};

/// Classifies every `(q, t)` in the given ranges, in order, skipping pairs
/// without embeddings.
pub fn atlas(qs: impl IntoIterator<Item = u64>, ts: impl IntoIterator<Item = u64> + Clone) -> Result<Vec<RegularMapRecord>, ClassifyError> {
    let mut out = Vec::new();
    for q in qs {
        for t in ts.clone() {
            out.extend(classify(q, t)?.records);
        }
    }
    Ok(out)
}

pub fn to_csv(records: &[RegularMapRecord]) -> String {
    let mut s = String::from(CSV_HEADER);
    s.push('\n');
    for r in records {
        s.push_str(&r.csv_row());
        s.push('\n');
    }
    s
}

pub fn to_markdown(records: &[RegularMapRecord]) -> String {
    let mut s = String::new();
    let cols: Vec<&str> = CSV_HEADER.split(',').collect();
    let _ = writeln!(s, "| {} |", cols.join(" | "));
    let _ = writeln!(s, "|{}", "---|".repeat(cols.len()));
    for r in records {
        let row = r.csv_row();
        let cells: Vec<&str> = row.split(',').collect();
        let _ = writeln!(s, "| {} |", cells.join(" | "));
    }
    s
}

/// One line per `(q, t, variant, a, type, genus)` with the number of maps
/// sharing it, e.g. `q=5 t=3 M2 a=2 {12,12} g=11 x2`. `a` is the least
/// nonnegative residue mod `t`; dipoles show `f` instead.
pub fn table_view(records: &[RegularMapRecord]) -> String {
    let mut groups: BTreeMap<(u64, u64, String, u64, u64, u64), usize> = BTreeMap::new();
    for r in records {
        let p = &r.params;
        let key_param = match p.variant {
            Variant::Dipole => format!("{} f={}", p.variant, p.f.unwrap_or(0)),
            v => format!("{v} a={}", p.a),
        };
        *groups
            .entry((p.q, p.t, key_param, r.map_type.m, r.map_type.n, r.genus))
            .or_default() += 1;
    }
    let mut s = String::new();
    for ((q, t, param, m, n, g), count) in groups {
        let _ = writeln!(s, "q={q} t={t} {param} {{{m},{n}}} g={g} x{count}");
    }
    s
}
