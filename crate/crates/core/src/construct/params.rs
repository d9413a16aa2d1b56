use std::fmt;

use serde::{Deserialize, Serialize};

use crate::ffield::{enumerate_primitive, gcd, PrimePower, PrimitivePoly};

use super::ConstructError;

/// Which family a parameter set belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Variant {
    /// Even `q > 4`, `c = 0`.
    M0,
    /// Even `q > 4`, even `t`, `c = t/2`.
    M1,
    /// Odd `q ≥ 3`, odd `t`.
    M2,
    /// `q = 2`, one per solution of `f² ≡ 1 (mod t)`.
    #[serde(rename = "dipole")]
    Dipole,
    /// `q = 4` with `G′ ≅ C_2 × C_2`.
    #[serde(rename = "q4A")]
    Q4A,
    /// `q = 4` with quaternion `G′`.
    #[serde(rename = "q4B")]
    Q4B,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::M0 => "M0",
            Variant::M1 => "M1",
            Variant::M2 => "M2",
            Variant::Dipole => "dipole",
            Variant::Q4A => "q4A",
            Variant::Q4B => "q4B",
        })
    }
}

/// An admissible parameter set. All residues are least nonnegative mod `t`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ParamSet {
    pub q: u64,
    pub t: u64,
    pub variant: Variant,
    pub poly: Option<PrimitivePoly>,
    pub ell: u64,
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub e: Vec<u64>,
    pub f: Option<u64>,
}

/// Largest multiplicity accepted when validating externally supplied sets.
pub const MAX_MULTIPLICITY: u64 = 1 << 20;

impl ParamSet {
    pub fn field(&self) -> PrimePower {
        PrimePower::from_order(self.q).expect("validated prime power")
    }

    /// `|G|`: `q(q − 1)t` for `q > 2`, `2t` for dipoles.
    pub fn group_order(&self) -> u64 {
        if self.q == 2 {
            2 * self.t
        } else {
            self.q * (self.q - 1) * self.t
        }
    }

    /// Expected valency `n = ord(y)`.
    pub fn valency(&self) -> u64 {
        if self.q == 2 {
            self.t
        } else {
            (self.q - 1) * self.t
        }
    }

    /// Short human label, e.g. `M2 λ + 3 over F_5` or `dipole f=3`.
    pub fn label(&self) -> String {
        match (&self.poly, self.variant) {
            (_, Variant::Dipole) => format!("dipole f={}", self.f.unwrap_or(0)),
            (_, Variant::Q4A | Variant::Q4B) => format!("{} a={}", self.variant, self.a),
            (Some(mu), v) => format!("{v} {mu}"),
            (None, v) => v.to_string(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("parameter sets serialize")
    }

    /// Parses and validates against the admissible sets for `(q, t)`.
    pub fn from_json(s: &str) -> Result<Self, ConstructError> {
        let ps: ParamSet =
            serde_json::from_str(s).map_err(|e| ConstructError::Malformed(e.to_string()))?;
        ps.validate()?;
        Ok(ps)
    }

    /// Succeeds iff this is one of the admissible parameter sets.
    pub fn validate(&self) -> Result<(), ConstructError> {
        if self.t == 0 || self.t > MAX_MULTIPLICITY {
            return Err(ConstructError::Inadmissible(format!(
                "multiplicity {} out of range",
                self.t
            )));
        }
        let pp = PrimePower::from_order(self.q)
            .map_err(|e| ConstructError::Inadmissible(e.to_string()))?;
        if self.q > 2 && self.poly.as_ref().map(|m| m.prime_power()) != Some(pp) {
            return Err(ConstructError::Inadmissible(
                "polynomial missing or over the wrong field".into(),
            ));
        }
        let candidates = param_sets_for(self.q, self.t, self.poly.as_ref());
        if candidates.contains(self) {
            Ok(())
        } else {
            Err(ConstructError::Inadmissible(format!(
                "no admissible parameter set matches {}",
                self.to_json()
            )))
        }
    }
}

/// `ℓ`: the face length of the simple complete map.
pub fn ell_of(q: u64) -> Result<u64, ConstructError> {
    PrimePower::from_order(q).map_err(|e| ConstructError::Inadmissible(e.to_string()))?;
    Ok(match q {
        2 | 3 => q,
        _ if q % 2 == 0 || q % 4 == 1 => q - 1,
        _ => (q - 1) / 2,
    })
}

/// `α(μ)`: the even representative of `μ(1) mod p` in
/// `{1, …, p−1} ∪ {p+1, …, 2p−1}`.
pub fn alpha_of(mu: &PrimitivePoly) -> Result<u64, ConstructError> {
    let p = mu.prime_power().p();
    if p == 2 {
        return Err(ConstructError::Inadmissible(
            "α is only defined for odd characteristic".into(),
        ));
    }
    let s = mu.value_at_one();
    debug_assert!(s != 0, "an irreducible polynomial of degree ≥ 1 has no root at 1 unless linear λ − 1");
    Ok(if s % 2 == 0 { s } else { s + p })
}

fn residue(v: i64, t: u64) -> u64 {
    v.rem_euclid(t as i64) as u64
}

/// Solutions of `f² ≡ 1 (mod t)` in `0..t`.
pub fn dipole_solutions(t: u64) -> Vec<u64> {
    (0..t).filter(|&f| (f * f) % t == 1 % t).collect()
}

/// Face length of the dipole map for `f`: `2t / gcd(f + 1, t)`.
pub fn dipole_face_length(t: u64, f: u64) -> u64 {
    2 * t / gcd(f + 1, t)
}

/// Admissible parameter sets for `(q, t)` and one fixed polynomial (ignored
/// for `q = 2`).
fn param_sets_for(q: u64, t: u64, mu: Option<&PrimitivePoly>) -> Vec<ParamSet> {
    let Ok(pp) = PrimePower::from_order(q) else {
        return Vec::new();
    };
    if t == 0 {
        return Vec::new();
    }
    let ell = ell_of(q).expect("prime power");
    let ti = t as i64;
    let base = |variant, a: i64, b: i64, c: i64, e: Vec<u64>| ParamSet {
        q,
        t,
        variant,
        poly: mu.cloned(),
        ell,
        a: residue(a, t),
        b: residue(b, t),
        c: residue(c, t),
        e,
        f: None,
    };
    match q {
        2 => dipole_solutions(t)
            .into_iter()
            .map(|f| ParamSet {
                q,
                t,
                variant: Variant::Dipole,
                poly: None,
                ell,
                a: 0,
                b: 0,
                c: 0,
                e: Vec::new(),
                f: Some(f),
            })
            .collect(),
        4 => {
            if mu.is_none() {
                return Vec::new();
            }
            let mut out = vec![base(Variant::Q4A, -1, 0, 0, vec![0])];
            if t % 2 == 0 {
                out.push(base(Variant::Q4A, ti / 2 - 1, 0, ti / 2, vec![0]));
            }
            if t % 4 == 0 {
                for a in [ti / 4 - 1, 3 * ti / 4 - 1] {
                    out.push(base(Variant::Q4B, a, 0, a + 1, vec![residue(ti / 2, t)]));
                }
            }
            out
        }
        _ if q % 2 == 1 => {
            let Some(mu) = mu else { return Vec::new() };
            if t % 2 == 0 {
                return Vec::new();
            }
            let p = pp.p() as i64;
            let a = if q == 3 {
                (ti - 3) / 2
            } else if q % 4 == 1 {
                -1
            } else {
                (ti - 1) / 2
            };
            let alpha = alpha_of(mu).expect("odd characteristic") as i64;
            let e = vec![0; pp.k() as usize - 1];
            vec![base(Variant::M2, a, (p + ti) / 2, alpha / 2, e)]
        }
        _ => {
            if mu.is_none() {
                return Vec::new();
            }
            let e = vec![0; pp.k() as usize - 1];
            let mut out = vec![base(Variant::M0, -1, 0, 0, e.clone())];
            if t % 2 == 0 {
                out.push(base(Variant::M1, ti / 2 - 1, 0, ti / 2, e));
            }
            out
        }
    }
}

/// All admissible parameter sets for `(q, t)`, ordered by polynomial (in
/// enumeration order) and then by variant; empty when no embedding exists.
pub fn param_sets(q: u64, t: u64) -> Vec<ParamSet> {
    let Ok(pp) = PrimePower::from_order(q) else {
        return Vec::new();
    };
    if q == 2 {
        return param_sets_for(q, t, None);
    }
    enumerate_primitive(pp)
        .iter()
        .flat_map(|mu| param_sets_for(q, t, Some(mu)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ell_examples() {
        assert_eq!(ell_of(9).unwrap(), 8);
        assert_eq!(ell_of(7).unwrap(), 3);
        assert_eq!(ell_of(3).unwrap(), 3);
        assert_eq!(ell_of(2).unwrap(), 2);
        assert_eq!(ell_of(8).unwrap(), 7);
        assert!(ell_of(6).is_err());
    }

    #[test]
    fn alpha_examples() {
        // λ − 2 over F_5 is λ + 3; λ − 3 is λ + 2
        assert_eq!(alpha_of(&PrimitivePoly::linear(5, 2).unwrap()).unwrap(), 4);
        assert_eq!(alpha_of(&PrimitivePoly::linear(5, 3).unwrap()).unwrap(), 8);
        assert_eq!(alpha_of(&PrimitivePoly::linear(3, 2).unwrap()).unwrap(), 2);
        let q4 = enumerate_primitive(PrimePower::new(2, 2).unwrap()).remove(0);
        assert!(alpha_of(&q4).is_err());
    }

    #[test]
    fn alpha_is_even_and_in_range() {
        for q in [3u64, 5, 7, 9, 11, 13, 25, 27, 49, 81, 125] {
            let pp = PrimePower::from_order(q).unwrap();
            for mu in enumerate_primitive(pp) {
                let a = alpha_of(&mu).unwrap();
                let p = pp.p();
                assert_eq!(a % 2, 0);
                assert!(a % p != 0 && a < 2 * p);
                assert_eq!(a % p, mu.value_at_one());
            }
        }
    }

    #[test]
    fn param_set_examples() {
        assert!(param_sets(5, 2).is_empty());
        assert_eq!(param_sets(8, 2).len(), 4);
        let q4: Vec<u64> = param_sets(4, 4).iter().map(|p| p.a).collect();
        assert_eq!(q4, vec![3, 1, 0, 2]);
        assert_eq!(param_sets(6, 1), vec![]);
        assert_eq!(param_sets(2, 8).len(), 4);
        assert_eq!(param_sets(3, 5).len(), 1);
        assert_eq!(param_sets(3, 5)[0].a, 1);
    }

    #[test]
    fn dipole_counts_follow_prime_factorization() {
        for t in 1..200u64 {
            let r = crate::ffield::factorize(t).iter().filter(|(p, _)| *p != 2).count() as u32;
            let s = if t % 8 == 0 {
                2
            } else if t % 4 == 0 {
                1
            } else {
                0
            };
            assert_eq!(dipole_solutions(t).len() as u64, 1 << (r + s), "t = {t}");
        }
    }

    #[test]
    fn json_roundtrip_and_validation() {
        for ps in param_sets(9, 3).into_iter().chain(param_sets(2, 8)).chain(param_sets(4, 8)) {
            let back = ParamSet::from_json(&ps.to_json()).unwrap();
            assert_eq!(back, ps);
        }
        let mut bad = param_sets(8, 2).remove(0);
        bad.c = 1;
        assert!(ParamSet::from_json(&bad.to_json()).is_err());
        assert!(ParamSet::from_json("{}").is_err());
        assert!(ParamSet::from_json("not json").is_err());
    }
}
