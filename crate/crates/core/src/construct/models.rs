use crate::ffield::PrimitivePoly;
use crate::fplinalg::{companion_transpose, MatFp, VecFp};
use crate::grp::{Elem, GroupModel, ModelTag};

use super::ConstructError;

/// Largest field order for which affine models are built.
pub const MAX_MODEL_FIELD: u64 = 4096;
/// Largest group order for which explicit models are built.
pub const MAX_MODEL_ORDER: u64 = 1 << 26;

/// The split extension `F_p^k ⋊ C_n` with `y^j` acting as `A^j`, where `A`
/// is the companion-transpose matrix of `μ` and `q − 1` divides `n`.
///
/// With `n = q − 1` this is AGL(1, q); with `n = (q − 1)t` it is the
/// inflated group. Element `(g, j)` is packed as `index(g)·n + j`.
#[derive(Debug, Clone)]
pub struct AffineModel {
    tag: ModelTag,
    p: u64,
    k: usize,
    q: u64,
    n: u64,
    matrix: MatFp,
    /// `act[i·q + g] = index(A^i g)` for `i < q − 1`.
    act: Vec<u32>,
    gx: Elem,
    gy: Elem,
}

impl AffineModel {
    /// `x = (e_1, j_x)` and `y = (0, 1)`.
    pub fn new(mu: &PrimitivePoly, n: u64, j_x: u64, tag: ModelTag) -> Result<Self, ConstructError> {
        let pp = mu.prime_power();
        let (p, k, q) = (pp.p(), pp.k() as usize, pp.q());
        if q > MAX_MODEL_FIELD || q.saturating_mul(n) > MAX_MODEL_ORDER {
            return Err(ConstructError::TooLarge(q.saturating_mul(n)));
        }
        assert!(n % (q - 1) == 0, "exponent modulus must be a multiple of q - 1");
        let matrix = companion_transpose(mu);
        let mut act = vec![0u32; ((q - 1) * q) as usize];
        for g in 0..q {
            let mut v = VecFp::from_index(p, k, g);
            for i in 0..q - 1 {
                act[(i * q + g) as usize] = v.index() as u32;
                v = matrix.apply(&v).expect("dimension");
            }
        }
        let mut m = Self {
            tag,
            p,
            k,
            q,
            n,
            matrix,
            act,
            gx: Elem(0),
            gy: Elem(0),
        };
        m.gx = m.pack(VecFp::unit(p, k, 1).index(), j_x % n);
        m.gy = m.pack(0, 1 % n);
        Ok(m)
    }

    pub fn pack(&self, g: u64, j: u64) -> Elem {
        Elem((g * self.n + j % self.n) as u32)
    }

    /// `(index(g), j)`.
    pub fn unpack(&self, e: Elem) -> (u64, u64) {
        let v = e.0 as u64;
        (v / self.n, v % self.n)
    }

    pub fn vector(&self, e: Elem) -> VecFp {
        VecFp::from_index(self.p, self.k, self.unpack(e).0)
    }

    pub fn matrix(&self) -> &MatFp {
        &self.matrix
    }

    /// Exponent modulus `n` of the cyclic part.
    pub fn modulus(&self) -> u64 {
        self.n
    }

    pub fn field_order(&self) -> u64 {
        self.q
    }

    fn act(&self, i: u64, g: u64) -> u64 {
        self.act[((i % (self.q - 1)) * self.q + g) as usize] as u64
    }

    fn add(&self, a: u64, b: u64) -> u64 {
        if self.p == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.k {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    fn neg(&self, a: u64) -> u64 {
        if self.p == 2 {
            return a;
        }
        let mut a = a;
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.k {
            out += ((self.p - a % self.p) % self.p) * place;
            a /= self.p;
            place *= self.p;
        }
        out
    }
}

impl GroupModel for AffineModel {
    fn tag(&self) -> ModelTag {
        self.tag
    }

    fn order(&self) -> u64 {
        self.q * self.n
    }

    fn identity(&self) -> Elem {
        Elem(0)
    }

    fn mul(&self, a: Elem, b: Elem) -> Elem {
        let (g, i) = self.unpack(a);
        let (h, j) = self.unpack(b);
        self.pack(self.add(g, self.act(i, h)), (i + j) % self.n)
    }

    fn inv(&self, a: Elem) -> Elem {
        let (g, i) = self.unpack(a);
        let back = (self.q - 1 - i % (self.q - 1)) % (self.q - 1);
        self.pack(self.neg(self.act(back, g)), (self.n - i) % self.n)
    }

    fn gen_x(&self) -> Elem {
        self.gx
    }

    fn gen_y(&self) -> Elem {
        self.gy
    }

    fn describe(&self, a: Elem) -> String {
        let (_, j) = self.unpack(a);
        format!("({:?}, {})", self.vector(a).entries(), j)
    }
}

/// The dipole group: elements `y^i x^ε` with product
/// `(i, ε)(j, ε′) = (i + f^ε j − εε′(f + 1), ε ⊕ ε′)` mod `t`.
#[derive(Debug, Clone)]
pub struct DipoleModel {
    t: u64,
    f: u64,
}

impl DipoleModel {
    pub fn new(t: u64, f: u64) -> Result<Self, ConstructError> {
        if t == 0 || (f * f) % t != 1 % t {
            return Err(ConstructError::Inadmissible(format!(
                "f = {f} does not satisfy f² ≡ 1 mod {t}"
            )));
        }
        if 2 * t > MAX_MODEL_ORDER {
            return Err(ConstructError::TooLarge(2 * t));
        }
        Ok(Self { t, f: f % t })
    }

    pub fn pack(&self, i: u64, eps: u64) -> Elem {
        Elem((2 * (i % self.t) + eps) as u32)
    }

    pub fn unpack(&self, e: Elem) -> (u64, u64) {
        ((e.0 / 2) as u64, (e.0 % 2) as u64)
    }
}

impl GroupModel for DipoleModel {
    fn tag(&self) -> ModelTag {
        ModelTag::Dipole
    }

    fn order(&self) -> u64 {
        2 * self.t
    }

    fn identity(&self) -> Elem {
        Elem(0)
    }

    fn mul(&self, a: Elem, b: Elem) -> Elem {
        let t = self.t;
        let (i, e) = self.unpack(a);
        let (j, e2) = self.unpack(b);
        let twist = if e == 1 { self.f * j % t } else { j };
        let corr = if e == 1 && e2 == 1 { (self.f + 1) % t } else { 0 };
        self.pack((i + twist + t - corr) % t, e ^ e2)
    }

    fn inv(&self, a: Elem) -> Elem {
        let t = self.t;
        let (i, e) = self.unpack(a);
        if e == 0 {
            self.pack((t - i % t) % t, 0)
        } else {
            // (i,1)(j,1) = (i + f j − (f+1), 0) = 0  ⇒  j = f(f + 1 − i) = f + 1 − f i
            let j = (self.f + 1 + t * t - self.f * i % t) % t;
            self.pack(j, 1)
        }
    }

    fn gen_x(&self) -> Elem {
        self.pack(0, 1)
    }

    fn gen_y(&self) -> Elem {
        self.pack(1 % self.t, 0)
    }

    fn describe(&self, a: Elem) -> String {
        let (i, e) = self.unpack(a);
        format!("y^{i} x^{e}")
    }
}
