use serde::Serialize;

use crate::grp::{
    closure, commutator_subgroup, element_order, eval_word, extend_homomorphism, GroupModel,
    Subgroup,
};

use super::{build_g, build_h, build_relators, ConstructError, ParamSet};

/// Isomorphism type of the commutator subgroup, as far as the report needs it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum DerivedType {
    Trivial,
    ElementaryAbelian { p: u64, rank: u32 },
    Quaternion,
    Other { order: u64, abelian: bool },
}

impl std::fmt::Display for DerivedType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DerivedType::Trivial => f.write_str("trivial"),
            DerivedType::ElementaryAbelian { p, rank: 1 } => write!(f, "C_{p}"),
            DerivedType::ElementaryAbelian { p, rank } => write!(f, "C_{p}^{rank}"),
            DerivedType::Quaternion => f.write_str("Q_8"),
            DerivedType::Other { order, abelian } => {
                write!(f, "{} group of order {order}", if *abelian { "abelian" } else { "non-abelian" })
            }
        }
    }
}

/// Identifies a subgroup as elementary abelian, quaternion, or neither.
pub fn derived_type(g: &dyn GroupModel, h: &Subgroup) -> DerivedType {
    let elems = h.elements();
    if elems.len() == 1 {
        return DerivedType::Trivial;
    }
    let abelian = elems
        .iter()
        .all(|&a| elems.iter().all(|&b| g.mul(a, b) == g.mul(b, a)));
    let orders: Vec<u64> = elems.iter().map(|&a| element_order(g, a)).collect();
    let n = elems.len() as u64;
    let p = *orders.iter().filter(|&&o| o > 1).min().expect("nontrivial");
    if abelian && orders.iter().all(|&o| o == 1 || o == p) {
        let mut rank = 0;
        let mut m = 1;
        while m < n {
            m *= p;
            rank += 1;
        }
        if m == n {
            return DerivedType::ElementaryAbelian { p, rank };
        }
    }
    if !abelian && n == 8 && orders.iter().filter(|&&o| o == 2).count() == 1 {
        return DerivedType::Quaternion;
    }
    DerivedType::Other { order: n, abelian }
}

/// Everything checked about one constructed group.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub params: ParamSet,
    pub order: u64,
    pub expected_order: u64,
    pub ord_x: u64,
    pub ord_y: u64,
    /// `(relator, evaluates to identity)`.
    pub relators: Vec<(String, bool)>,
    pub y_power_central: bool,
    pub derived_order: u64,
    pub derived_type: DerivedType,
    /// `|G′ ∩ ⟨y⟩|`.
    pub derived_meets_y: u64,
    /// `G/⟨y^{q−1}⟩ ≅ AGL(1, q)` via `x ↦ u`, `y ↦ v`; `None` for dipoles.
    pub quotient_is_agl: Option<bool>,
    pub failures: Vec<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Builds `G` for `ps` and checks relators, orders, centrality of
/// `⟨y^{q−1}⟩`, the commutator subgroup, and the quotient by `⟨y^{q−1}⟩`.
pub fn verify_construction(ps: &ParamSet) -> Result<VerifyReport, ConstructError> {
    let g = build_g(ps)?;
    let g = g.as_ref();
    let (x, y) = (g.gen_x(), g.gen_y());
    let mut failures = Vec::new();

    let relators: Vec<(String, bool)> = build_relators(ps)
        .iter()
        .map(|r| (r.to_string(), eval_word(g, r, x, y) == g.identity()))
        .collect();
    for (r, ok) in &relators {
        if !ok {
            failures.push(format!("relator {r} is not the identity"));
        }
    }

    let order = g.order();
    if order != ps.group_order() {
        failures.push(format!("order {order}, expected {}", ps.group_order()));
    }
    if let Err(e) = crate::grp::check_generates(g) {
        failures.push(e.to_string());
    }
    let ord_x = element_order(g, x);
    let ord_y = element_order(g, y);
    if ord_y != ps.valency() {
        failures.push(format!("ord(y) = {ord_y}, expected {}", ps.valency()));
    }

    let step = if ps.q == 2 { 1 } else { ps.q - 1 };
    let yn = g.pow(y, step as i64);
    let y_power_central = g.mul(x, yn) == g.mul(yn, x);
    if !y_power_central {
        failures.push(format!("y^{step} is not central"));
    }

    let derived = commutator_subgroup(g);
    let derived_type = derived_type(g, &derived);
    let ys = closure(g, &[y], order).map_err(|e| ConstructError::Check(e.to_string()))?;
    let derived_meets_y = derived.elements().iter().filter(|&&h| ys.contains(h)).count() as u64;

    let quotient_is_agl = if ps.q == 2 {
        None
    } else {
        let mu = ps.poly.as_ref().expect("validated");
        let h = build_h(mu)?;
        let ok = match extend_homomorphism(g, &[x, y], &h.model, &[h.u(), h.v()]) {
            Err(_) => false,
            Ok(labels) => {
                let kernel = labels.iter().filter(|l| **l == Some(h.model.identity())).count() as u64;
                let mut hit = vec![false; h.model.order() as usize];
                for l in labels.iter().flatten() {
                    hit[l.index()] = true;
                }
                let n = closure(g, &[yn], order).map_err(|e| ConstructError::Check(e.to_string()))?;
                kernel == ps.t
                    && n.len() as u64 == ps.t
                    && n.elements().iter().all(|e| labels[e.index()] == Some(h.model.identity()))
                    && hit.iter().all(|&b| b)
            }
        };
        if !ok {
            failures.push("G/<y^(q-1)> is not AGL(1,q) under x->u, y->v".into());
        }
        Some(ok)
    };

    Ok(VerifyReport {
        params: ps.clone(),
        order,
        expected_order: ps.group_order(),
        ord_x,
        ord_y,
        relators,
        y_power_central,
        derived_order: derived.len() as u64,
        derived_type,
        derived_meets_y,
        quotient_is_agl,
        failures,
    })
}
