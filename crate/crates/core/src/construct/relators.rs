use crate::cosetenum::{Presentation, PresentationError};
use crate::ffield::{gcd, PrimitivePoly};
use crate::grp::Word;

use super::{alpha_of, ell_of, ParamSet};

/// `y_q`: `y^{(q−1)/2}` for odd `q`, the empty word for even `q`.
pub fn yq_word(q: u64) -> Word {
    if q % 2 == 1 {
        Word::y(((q - 1) / 2) as i64)
    } else {
        Word::identity()
    }
}

/// `x y y_q`, the word whose conjugates by powers of `y` span the
/// translation subgroup.
fn translation(q: u64) -> Word {
    Word::x(1).concat(&Word::y(1)).concat(&yq_word(q))
}

/// `W(x, y; μ) = y^k (xyy_q) y^{−k} · ∏_{i=0}^{k−1} (y^i (xyy_q) y^{−i})^{a_i}`.
///
/// Coefficients are taken as integers in `0..p`.
pub fn w_word(mu: &PrimitivePoly) -> Word {
    let coeffs: Vec<i64> = mu.coeffs().iter().map(|&a| a as i64).collect();
    w_with_exponents(mu.prime_power().q(), &coeffs)
}

/// `W` with the integer representative of `a_0` shifted by a multiple of `p`
/// so that the total exponent of `xyy_q` is exactly `α(μ)`. In the inflated
/// groups `(xyy_q)^p` is not trivial, so the choice of representatives
/// matters, and `c = α/2` is correct precisely for this one.
pub fn w_word_alpha(mu: &PrimitivePoly) -> Word {
    let alpha = alpha_of(mu).expect("odd characteristic") as i64;
    let mut coeffs: Vec<i64> = mu.coeffs().iter().map(|&a| a as i64).collect();
    let total = 1 + coeffs.iter().sum::<i64>();
    coeffs[0] += alpha - total;
    w_with_exponents(mu.prime_power().q(), &coeffs)
}

fn w_with_exponents(q: u64, coeffs: &[i64]) -> Word {
    let s = translation(q);
    let mut w = s.conjugate_by(&Word::y(coeffs.len() as i64));
    for (i, &a) in coeffs.iter().enumerate() {
        w = w.concat(&s.conjugate_by(&Word::y(i as i64)).pow(a));
    }
    w
}

fn commutators(q: u64, k: usize) -> impl Iterator<Item = Word> {
    let s = translation(q);
    (1..k).map(move |i| Word::commutator(&s, &s.conjugate_by(&Word::y(i as i64))))
}

/// Relators presenting AGL(1, q) in `x = u`, `y = v`: `v^{q−1}`, `(uv)²`,
/// `u^ℓ`, `(uvv_q)^p`, the `k − 1` commutators, and `W(u, v; μ)`.
pub fn agl_relators(mu: &PrimitivePoly) -> Vec<Word> {
    let pp = mu.prime_power();
    let (p, q) = (pp.p(), pp.q());
    let ell = ell_of(q).expect("prime power");
    let mut rels = vec![
        Word::y(q as i64 - 1),
        Word::from_letters([(crate::grp::Gen::X, 1), (crate::grp::Gen::Y, 1)]).pow(2),
        Word::x(ell as i64),
        translation(q).pow(p as i64),
    ];
    rels.extend(commutators(q, pp.k() as usize));
    rels.push(w_word(mu));
    rels
}

/// `y^{(1−q)ω}`.
fn lift(q: u64, omega: u64) -> Word {
    Word::y((1 - q as i64) * omega as i64)
}

/// The full relator list for a parameter set.
pub fn build_relators(ps: &ParamSet) -> Vec<Word> {
    let (q, t) = (ps.q, ps.t as i64);
    let xy = Word::x(1).concat(&Word::y(1));
    match q {
        2 => {
            let f = ps.f.unwrap_or(1);
            // f + 1 taken in 1..=t so that m = 2t / gcd(f + 1, t)
            let f1 = (f % ps.t) + 1;
            let m = 2 * ps.t / gcd(f1, ps.t);
            vec![
                Word::x(m as i64),
                Word::y(t),
                xy.pow(2),
                Word::x(2).concat(&Word::y(f1 as i64)),
            ]
        }
        4 => {
            let yx = Word::y(1).concat(&Word::x(1));
            vec![
                Word::x(3).concat(&Word::y(-3 * ps.a as i64)),
                Word::y(3 * t),
                xy.pow(2),
                Word::commutator(&Word::x(1), &Word::y(3)),
                Word::commutator(&xy, &yx).concat(&Word::y(-3 * ps.e[0] as i64)),
            ]
        }
        _ => {
            let mu = ps.poly.as_ref().expect("q > 2 carries a polynomial");
            let p = mu.prime_power().p();
            let mut rels = vec![
                Word::y((q as i64 - 1) * t),
                xy.pow(2),
                Word::commutator(&Word::x(1), &Word::y(q as i64 - 1)),
                Word::x(ps.ell as i64).concat(&lift(q, ps.a)),
                translation(q).pow(p as i64).concat(&lift(q, ps.b)),
            ];
            for (w, &e) in commutators(q, mu.prime_power().k() as usize).zip(&ps.e) {
                rels.push(w.concat(&lift(q, e)));
            }
            let w = if q % 2 == 1 { w_word_alpha(mu) } else { w_word(mu) };
            rels.push(w.concat(&lift(q, ps.c)));
            rels
        }
    }
}

pub fn presentation_of(ps: &ParamSet) -> Result<Presentation, PresentationError> {
    Presentation::new(build_relators(ps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::param_sets;
    use crate::ffield::{enumerate_primitive, PrimePower};

    #[test]
    fn q3_relator_matches_small_case_presentation() {
        let ps = &param_sets(3, 5)[0];
        let rels = build_relators(ps);
        assert!(rels.contains(&"x^3 y^-2".parse().unwrap()));
        assert!(rels.contains(&"x^-1 y^-2 x y^2".parse().unwrap()));
    }

    #[test]
    fn dipole_relators() {
        let ps = param_sets(2, 8).into_iter().find(|p| p.f == Some(3)).unwrap();
        let rels: Vec<String> = build_relators(&ps).iter().map(|w| w.to_string()).collect();
        assert_eq!(rels, ["x^4", "y^8", "x y x y", "x^2 y^4"]);
    }

    #[test]
    fn q4_relators() {
        let ps = &param_sets(4, 2)[0];
        let rels: Vec<String> = build_relators(ps).iter().map(|w| w.to_string()).collect();
        assert_eq!(rels[0], "x^3 y^-3");
        assert_eq!(rels[1], "y^6");
        assert_eq!(rels[4], "y^-1 x^-2 y^-1 x y^2 x");
    }

    #[test]
    fn w_for_q4_collapses() {
        // y²(xy)y⁻² · (xy) · y(xy)y⁻¹, factors taken in increasing i
        let mu = enumerate_primitive(PrimePower::new(2, 2).unwrap()).remove(0);
        assert_eq!(w_word(&mu).to_string(), "y^2 x y^-1 x y^2 x");
    }

    #[test]
    fn w_has_k_plus_one_translation_blocks_at_most() {
        let mu = enumerate_primitive(PrimePower::new(3, 2).unwrap()).remove(0);
        let w = w_word(&mu);
        assert!(w.exponent_sum(crate::grp::Gen::X) >= 1);
        assert_eq!(agl_relators(&mu).len(), 4 + 1 + 1);
    }

    #[test]
    fn alpha_word_has_total_exponent_alpha() {
        for q in [5u64, 7, 9, 25, 27] {
            for mu in enumerate_primitive(PrimePower::from_order(q).unwrap()) {
                let w = w_word_alpha(&mu);
                // every factor of xyy_q contributes one x
                assert_eq!(w.exponent_sum(crate::grp::Gen::X), alpha_of(&mu).unwrap() as i64);
            }
        }
    }
}
