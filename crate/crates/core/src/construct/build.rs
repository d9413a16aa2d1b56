use std::sync::Arc;

use crate::cosetenum::{default_limit, enumerate_cosets, Enumeration};
use crate::ffield::PrimitivePoly;
use crate::fplinalg::MatFp;
use crate::grp::{closure, extend_homomorphism, Cyclic, Elem, GroupModel, ModelTag, Subgroup};

use super::{presentation_of, AffineModel, ConstructError, DipoleModel, ParamSet, Variant};

/// A shareable constructed group with its distinguished generators.
pub type Group = Arc<dyn GroupModel>;

/// AGL(1, q) with `u = (e_1, −A⁻¹)` as `gen_x` and `v = (0, A)` as `gen_y`.
#[derive(Debug, Clone)]
pub struct AglGroup {
    pub model: AffineModel,
}

impl AglGroup {
    pub fn u(&self) -> Elem {
        self.model.gen_x()
    }

    pub fn v(&self) -> Elem {
        self.model.gen_y()
    }
}

/// Exponent `j` with `A^j = −A⁻¹`, using `A^{(q−1)/2} = −I` for odd `q`.
fn u_exponent(q: u64) -> u64 {
    let n = q - 1;
    if q % 2 == 1 {
        (n / 2 + n - 1) % n
    } else {
        (n - 1) % n
    }
}

pub fn build_h(mu: &PrimitivePoly) -> Result<AglGroup, ConstructError> {
    let q = mu.prime_power().q();
    let model = AffineModel::new(mu, q - 1, u_exponent(q), ModelTag::Agl)?;
    Ok(AglGroup { model })
}

/// The kernel of `ϑ: H → ⟨v⟩`, `u ↦ v_q v⁻¹`, `v ↦ v`, computed by extending
/// the assignment into the cyclic group of order `q − 1`.
pub fn kernel_of_theta(h: &AglGroup) -> Result<Subgroup, ConstructError> {
    let q = h.model.field_order();
    let n = q - 1;
    let vq = if q % 2 == 1 { n / 2 } else { 0 };
    let target = Cyclic::new(n as u32);
    let images = [Elem(((vq + n - 1) % n) as u32), Elem((1 % n) as u32)];
    let labels = extend_homomorphism(&h.model, &[h.u(), h.v()], &target, &images)
        .map_err(|c| ConstructError::Check(format!("ϑ is not a homomorphism: {c}")))?;
    let kernel: Vec<Elem> = labels
        .iter()
        .enumerate()
        .filter(|(_, l)| **l == Some(Elem(0)))
        .map(|(i, _)| Elem(i as u32))
        .collect();
    closure(&h.model, &kernel, h.model.order())
        .map_err(|e| ConstructError::Check(e.to_string()))
}

/// Exponent `j_x` with `x = (e_1, j_x)` in the inflated model.
fn x_exponent(ps: &ParamSet) -> u64 {
    let (q, t) = (ps.q, ps.t);
    let n = (q - 1) * t;
    let half = (q - 1) * t / 2;
    match ps.variant {
        Variant::M2 => (t * (q - 1) / 2 + n - 1) % n,
        Variant::M0 => n - 1,
        Variant::M1 => (half + n - 1) % n,
        Variant::Q4A if ps.a == (ps.t - 1) % ps.t => n - 1,
        Variant::Q4A => (half + n - 1) % n,
        Variant::Dipole | Variant::Q4B => unreachable!("not an inflated model"),
    }
}

/// Builds `G` for an admissible parameter set.
pub fn build_g(ps: &ParamSet) -> Result<Group, ConstructError> {
    ps.validate()?;
    match ps.variant {
        Variant::Dipole => Ok(Arc::new(DipoleModel::new(ps.t, ps.f.unwrap_or(0))?)),
        Variant::Q4B => {
            let p = presentation_of(ps).map_err(|e| ConstructError::Check(e.to_string()))?;
            let limit = default_limit(ps.group_order());
            match enumerate_cosets(&p, limit)? {
                Enumeration::Inconclusive { limit, .. } => Err(ConstructError::Inconclusive { limit }),
                e @ Enumeration::Complete(_) => {
                    let model = e.into_model().expect("complete enumeration");
                    if model.order() != ps.group_order() {
                        return Err(ConstructError::Check(format!(
                            "presentation defines a group of order {}, expected {}",
                            model.order(),
                            ps.group_order()
                        )));
                    }
                    Ok(Arc::new(model))
                }
            }
        }
        _ => {
            let mu = ps.poly.as_ref().expect("validated");
            let q = ps.q;
            if q % 2 == 1 {
                check_minus_identity(mu, ps.t)?;
            }
            let n = (q - 1) * ps.t;
            Ok(Arc::new(AffineModel::new(mu, n, x_exponent(ps), ModelTag::Inflated)?))
        }
    }
}

/// `A^{t(q−1)/2} = −I` for odd `t`; this is what makes `(xy)² = 1`.
fn check_minus_identity(mu: &PrimitivePoly, t: u64) -> Result<(), ConstructError> {
    let pp = mu.prime_power();
    let a = crate::fplinalg::companion_transpose(mu);
    let power = a.pow(t * (pp.q() - 1) / 2);
    let k = pp.k() as usize;
    let minus = MatFp::identity(pp.p(), k)
        .sub(&MatFp::identity(pp.p(), k))
        .and_then(|z| z.sub(&MatFp::identity(pp.p(), k)))
        .expect("square");
    if power == minus {
        Ok(())
    } else {
        Err(ConstructError::Check(format!(
            "A^(t(q-1)/2) is not -I for t = {t}"
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{agl_relators, build_relators, param_sets};
    use crate::ffield::{enumerate_primitive, PrimePower};
    use crate::fplinalg::companion_transpose;
    use crate::grp::{check_generates, element_order, eval_word};

    #[test]
    fn agl_generators_match_definition() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 16, 25, 27] {
            let pp = PrimePower::from_order(q).unwrap();
            for mu in enumerate_primitive(pp) {
                let h = build_h(&mu).unwrap();
                assert_eq!(h.model.order(), q * (q - 1));
                check_generates(&h.model).unwrap();
                // u = (e_1, −A⁻¹): compare the matrix part against A
                let a = companion_transpose(&mu);
                let ainv = a.pow(q - 2);
                let j = h.model.unpack(h.u()).1;
                let neg_ainv = MatFp::identity(pp.p(), pp.k() as usize)
                    .sub(&MatFp::identity(pp.p(), pp.k() as usize))
                    .unwrap()
                    .sub(&ainv)
                    .unwrap();
                assert_eq!(a.pow(j), neg_ainv, "q = {q}");
                for r in agl_relators(&mu) {
                    assert_eq!(eval_word(&h.model, &r, h.u(), h.v()), h.model.identity());
                }
            }
        }
    }

    #[test]
    fn agl_orders() {
        let h = build_h(&PrimitivePoly::linear(5, 2).unwrap()).unwrap();
        let m = &h.model;
        assert_eq!(element_order(m, h.u()), 4);
        assert_eq!(element_order(m, h.v()), 4);
        assert_eq!(element_order(m, m.mul(h.u(), h.v())), 2);
        let h7 = build_h(&PrimitivePoly::linear(7, 3).unwrap()).unwrap();
        assert_eq!(element_order(&h7.model, h7.u()), 3);
        let h2 = build_h(&PrimitivePoly::linear(2, 1).unwrap()).unwrap();
        assert_eq!(h2.model.order(), 2);
    }

    #[test]
    fn kernel_examples() {
        for q in [2u64, 8, 9] {
            let pp = PrimePower::from_order(q).unwrap();
            let h = build_h(&enumerate_primitive(pp)[0]).unwrap();
            let l = kernel_of_theta(&h).unwrap();
            assert_eq!(l.len() as u64, q);
            for &g in l.elements() {
                if g != h.model.identity() {
                    assert_eq!(element_order(&h.model, g), pp.p());
                }
            }
        }
    }

    #[test]
    fn relators_hold_in_every_small_construction() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
            for t in 1..=6 {
                for ps in param_sets(q, t) {
                    let g = build_g(&ps).unwrap();
                    assert_eq!(g.order(), ps.group_order(), "{}", ps.to_json());
                    check_generates(g.as_ref()).unwrap();
                    for r in build_relators(&ps) {
                        assert_eq!(
                            eval_word(g.as_ref(), &r, g.gen_x(), g.gen_y()),
                            g.identity(),
                            "{r} fails for {}",
                            ps.to_json()
                        );
                    }
                    assert_eq!(element_order(g.as_ref(), g.gen_y()), ps.valency());
                }
            }
        }
    }

    #[test]
    fn table_one_examples() {
        let ps = param_sets(5, 3).into_iter().find(|p| p.poly.as_ref().unwrap().coeffs() == [3]).unwrap();
        let g = build_g(&ps).unwrap();
        assert_eq!(g.order(), 60);
        assert_eq!(element_order(g.as_ref(), g.gen_x()), 12);
        let g7 = build_g(&param_sets(7, 3)[0]).unwrap();
        assert_eq!(element_order(g7.as_ref(), g7.gen_x()), 9);
        assert_eq!(element_order(g7.as_ref(), g7.gen_y()), 18);
    }
}
