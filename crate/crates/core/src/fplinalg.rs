//! Dense vectors and matrices over F_p, sized for small field degrees.

use thiserror::Error;

use crate::ffield::{factorize, inv_mod, PrimePower, PrimitivePoly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinAlgError {
    #[error("dimension mismatch: {0} vs {1}")]
    Dimension(usize, usize),
    #[error("matrix is singular")]
    Singular,
    #[error("matrix order exceeds {0}")]
    OrderTooLarge(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VecFp {
    p: u64,
    entries: Vec<u64>,
}

impl VecFp {
    pub fn zero(p: u64, k: usize) -> Self {
        Self {
            p,
            entries: vec![0; k],
        }
    }

    /// The unit vector `e_i`, 1-based.
    pub fn unit(p: u64, k: usize, i: usize) -> Self {
        assert!((1..=k).contains(&i), "unit vector index out of range");
        let mut v = Self::zero(p, k);
        v.entries[i - 1] = 1;
        v
    }

    pub fn from_entries(p: u64, entries: Vec<u64>) -> Self {
        let entries = entries.into_iter().map(|e| e % p).collect();
        Self { p, entries }
    }

    /// Inverse of [`VecFp::index`].
    pub fn from_index(p: u64, k: usize, mut idx: u64) -> Self {
        let mut entries = vec![0; k];
        for e in entries.iter_mut() {
            *e = idx % p;
            idx /= p;
        }
        Self { p, entries }
    }

    /// `Σ v_i p^(i-1)`, a bijection onto `0..p^k`.
    pub fn index(&self) -> u64 {
        self.entries.iter().rev().fold(0, |acc, &e| acc * self.p + e)
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    pub fn add(&self, other: &Self) -> Result<Self, LinAlgError> {
        self.check(other.len())?;
        let p = self.p;
        Ok(Self {
            p,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| (a + b) % p)
                .collect(),
        })
    }

    pub fn neg(&self) -> Self {
        let p = self.p;
        Self {
            p,
            entries: self.entries.iter().map(|&a| (p - a) % p).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self, LinAlgError> {
        self.add(&other.neg())
    }

    fn check(&self, n: usize) -> Result<(), LinAlgError> {
        if self.len() == n {
            Ok(())
        } else {
            Err(LinAlgError::Dimension(self.len(), n))
        }
    }
}

/// Square matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MatFp {
    p: u64,
    k: usize,
    entries: Vec<u64>,
}

impl MatFp {
    pub fn identity(p: u64, k: usize) -> Self {
        let mut entries = vec![0; k * k];
        for i in 0..k {
            entries[i * k + i] = 1 % p;
        }
        Self { p, k, entries }
    }

    pub fn from_rows(p: u64, rows: &[Vec<u64>]) -> Result<Self, LinAlgError> {
        let k = rows.len();
        let mut entries = Vec::with_capacity(k * k);
        for r in rows {
            if r.len() != k {
                return Err(LinAlgError::Dimension(r.len(), k));
            }
            entries.extend(r.iter().map(|e| e % p));
        }
        Ok(Self { p, k, entries })
    }

    pub fn dim(&self) -> usize {
        self.k
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.entries[r * self.k + c]
    }

    pub fn rows(&self) -> Vec<Vec<u64>> {
        self.entries.chunks(self.k.max(1)).map(<[u64]>::to_vec).collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.p, self.k)
    }

    pub fn mul(&self, other: &Self) -> Result<Self, LinAlgError> {
        if self.k != other.k {
            return Err(LinAlgError::Dimension(self.k, other.k));
        }
        let (k, p) = (self.k, self.p);
        let mut entries = vec![0; k * k];
        for i in 0..k {
            for l in 0..k {
                let a = self.entries[i * k + l];
                if a == 0 {
                    continue;
                }
                for j in 0..k {
                    entries[i * k + j] = (entries[i * k + j] + a * other.entries[l * k + j]) % p;
                }
            }
        }
        Ok(Self { p, k, entries })
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut result = Self::identity(self.p, self.k);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).expect("same dimension");
            }
            base = base.mul(&base).expect("same dimension");
            e >>= 1;
        }
        result
    }

    pub fn apply(&self, v: &VecFp) -> Result<VecFp, LinAlgError> {
        v.check(self.k)?;
        let (k, p) = (self.k, self.p);
        let entries = (0..k)
            .map(|i| {
                (0..k).fold(0, |acc, j| (acc + self.entries[i * k + j] * v.entries[j]) % p)
            })
            .collect();
        Ok(VecFp { p, entries })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, LinAlgError> {
        if self.k != other.k {
            return Err(LinAlgError::Dimension(self.k, other.k));
        }
        let p = self.p;
        Ok(Self {
            p,
            k: self.k,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| (a + p - b) % p)
                .collect(),
        })
    }

    pub fn determinant(&self) -> u64 {
        let (k, p) = (self.k, self.p);
        let mut m = self.entries.clone();
        let mut det = 1u64;
        for col in 0..k {
            let Some(pivot) = (col..k).find(|&r| m[r * k + col] != 0) else {
                return 0;
            };
            if pivot != col {
                for j in 0..k {
                    m.swap(pivot * k + j, col * k + j);
                }
                det = (p - det) % p;
            }
            let pv = m[col * k + col];
            det = det * pv % p;
            let inv = inv_mod(pv, p);
            for r in col + 1..k {
                let f = m[r * k + col] * inv % p;
                if f == 0 {
                    continue;
                }
                for j in col..k {
                    m[r * k + j] = (m[r * k + j] + p - f * m[col * k + j] % p) % p;
                }
            }
        }
        det
    }

    /// Characteristic polynomial `det(λI − A)`, coefficients low first,
    /// monic (length `k + 1`). Computed by reduction to upper Hessenberg form.
    pub fn char_poly(&self) -> Vec<u64> {
        let (k, p) = (self.k, self.p);
        let mut h = self.entries.clone();
        let at = |r: usize, c: usize| r * k + c;
        // similarity transforms to Hessenberg form
        for col in 0..k.saturating_sub(2) {
            let Some(piv) = (col + 1..k).find(|&r| h[at(r, col)] != 0) else {
                continue;
            };
            if piv != col + 1 {
                for j in 0..k {
                    h.swap(at(piv, j), at(col + 1, j));
                }
                for i in 0..k {
                    h.swap(at(i, piv), at(i, col + 1));
                }
            }
            let inv = inv_mod(h[at(col + 1, col)], p);
            for r in col + 2..k {
                let f = h[at(r, col)] * inv % p;
                if f == 0 {
                    continue;
                }
                // row_r -= f row_{col+1}; col_{col+1} += f col_r
                for j in 0..k {
                    h[at(r, j)] = (h[at(r, j)] + p - f * h[at(col + 1, j)] % p) % p;
                }
                for i in 0..k {
                    h[at(i, col + 1)] = (h[at(i, col + 1)] + f * h[at(i, r)]) % p;
                }
            }
        }
        // characteristic polynomials of leading principal submatrices
        let mul_lin = |poly: &[u64], shift: u64| -> Vec<u64> {
            // (λ − shift) * poly
            let mut out = vec![0; poly.len() + 1];
            for (i, &c) in poly.iter().enumerate() {
                out[i + 1] = (out[i + 1] + c) % p;
                out[i] = (out[i] + p - shift * c % p) % p;
            }
            out
        };
        let mut polys: Vec<Vec<u64>> = vec![vec![1]];
        for m in 0..k {
            let mut next = mul_lin(&polys[m], h[at(m, m)]);
            let mut prod = 1u64;
            for i in (0..m).rev() {
                prod = prod * h[at(i + 1, i)] % p;
                let coef = prod * h[at(i, m)] % p;
                if coef == 0 {
                    continue;
                }
                for (d, &c) in polys[i].iter().enumerate() {
                    next[d] = (next[d] + p - coef * c % p) % p;
                }
            }
            polys.push(next);
        }
        polys.pop().unwrap()
    }
}

/// The matrix with ones on the subdiagonal and last column `−a_0, …, −a_{k−1}`;
/// its characteristic polynomial is `μ`.
pub fn companion_transpose(mu: &PrimitivePoly) -> MatFp {
    let pp = mu.prime_power();
    let (p, k) = (pp.p(), pp.k() as usize);
    let mut entries = vec![0; k * k];
    for i in 1..k {
        entries[i * k + (i - 1)] = 1;
    }
    for (i, &a) in mu.coeffs().iter().enumerate() {
        entries[i * k + (k - 1)] = (p - a) % p;
    }
    MatFp { p, k, entries }
}

/// Upper bound on iterated order search for matrices not known to lie in a
/// cyclic subgroup of order `q − 1`.
const ORDER_ITERATION_CAP: u64 = 1 << 24;

/// Least `n ≥ 1` with `Aⁿ = I`.
pub fn matrix_order(a: &MatFp, pp: PrimePower) -> Result<u64, LinAlgError> {
    if a.determinant() == 0 {
        return Err(LinAlgError::Singular);
    }
    let n = pp.q() - 1;
    if a.pow(n).is_identity() {
        let mut order = n;
        for (r, _) in factorize(n) {
            while order % r == 0 && a.pow(order / r).is_identity() {
                order /= r;
            }
        }
        return Ok(order);
    }
    let id = MatFp::identity(a.p, a.k);
    let mut cur = a.clone();
    for n in 1..=ORDER_ITERATION_CAP {
        if cur == id {
            return Ok(n);
        }
        cur = cur.mul(a)?;
    }
    Err(LinAlgError::OrderTooLarge(ORDER_ITERATION_CAP))
}
