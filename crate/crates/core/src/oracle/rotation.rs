use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Largest dart count accepted from text input.
pub const MAX_DARTS: usize = 1 << 22;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RotationError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("dart {0} out of range")]
    DartRange(u32),
    #[error("dart {0} appears more than once")]
    Duplicate(u32),
    #[error("dart {0} is missing")]
    Missing(u32),
    #[error("edge pairing is not a fixed-point-free involution at dart {0}")]
    BadPairing(u32),
    #[error("expected {expected} vertices, found {found}")]
    VertexCount { expected: usize, found: usize },
    #[error("underlying graph is not K_{r}^({t}): {reason}")]
    NotComplete { r: usize, t: usize, reason: String },
    #[error("too many darts ({0})")]
    TooLarge(usize),
}

/// A rotation system: darts `0..2E`, the rotation `R` whose cycles are the
/// vertices, and the edge involution `L`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSystem {
    r: usize,
    t: usize,
    /// One cyclic order per vertex, vertex `v` at index `v`, lowest dart first.
    cycles: Vec<Vec<u32>>,
    rotation: Vec<u32>,
    edge: Vec<u32>,
    vertex_of: Vec<u32>,
}

impl RotationSystem {
    /// Builds and validates a rotation system on `K_r^{(t)}` from per-vertex
    /// cyclic orders and the edge pairing.
    pub fn new(r: usize, t: usize, cycles: Vec<Vec<u32>>, edge: Vec<u32>) -> Result<Self, RotationError> {
        let n = edge.len();
        if n > MAX_DARTS {
            return Err(RotationError::TooLarge(n));
        }
        if cycles.len() != r {
            return Err(RotationError::VertexCount {
                expected: r,
                found: cycles.len(),
            });
        }
        let cycles: Vec<Vec<u32>> = cycles
            .into_iter()
            .map(|mut c| {
                if let Some(i) = (0..c.len()).min_by_key(|&i| c[i]) {
                    c.rotate_left(i);
                }
                c
            })
            .collect();
        let mut rotation = vec![u32::MAX; n];
        let mut vertex_of = vec![u32::MAX; n];
        for (v, cyc) in cycles.iter().enumerate() {
            for (i, &d) in cyc.iter().enumerate() {
                if d as usize >= n {
                    return Err(RotationError::DartRange(d));
                }
                if vertex_of[d as usize] != u32::MAX {
                    return Err(RotationError::Duplicate(d));
                }
                vertex_of[d as usize] = v as u32;
                rotation[d as usize] = cyc[(i + 1) % cyc.len()];
            }
        }
        if let Some(d) = vertex_of.iter().position(|&v| v == u32::MAX) {
            return Err(RotationError::Missing(d as u32));
        }
        for (d, &e) in edge.iter().enumerate() {
            if e as usize >= n || e as usize == d || edge[e as usize] as usize != d {
                return Err(RotationError::BadPairing(d as u32));
            }
        }
        let rs = Self {
            r,
            t,
            cycles,
            rotation,
            edge,
            vertex_of,
        };
        rs.check_complete()?;
        Ok(rs)
    }

    /// Builds from the permutations directly; vertices are the cycles of
    /// `rotation`, numbered by their least dart.
    pub fn from_permutations(r: usize, t: usize, rotation: &[u32], edge: Vec<u32>) -> Result<Self, RotationError> {
        let n = rotation.len();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut d = s;
            while !seen[d] {
                seen[d] = true;
                cyc.push(d as u32);
                d = rotation[d] as usize;
                if d >= n {
                    return Err(RotationError::DartRange(d as u32));
                }
            }
            if d != s {
                return Err(RotationError::Duplicate(d as u32));
            }
            cycles.push(cyc);
        }
        Self::new(r, t, cycles, edge)
    }

    fn check_complete(&self) -> Result<(), RotationError> {
        let (r, t) = (self.r, self.t);
        let fail = |reason: String| Err(RotationError::NotComplete { r, t, reason });
        let expected = r.checked_mul(r.saturating_sub(1)).and_then(|v| v.checked_mul(t));
        if expected != Some(self.edge.len()) {
            return fail(format!("{} darts", self.edge.len()));
        }
        let mut count = vec![0usize; r * r];
        for d in 0..self.edge.len() {
            let (u, v) = (self.vertex_of[d] as usize, self.vertex_of[self.edge[d] as usize] as usize);
            if u == v {
                return fail(format!("loop at vertex {u}"));
            }
            count[u * r + v] += 1;
        }
        for u in 0..r {
            for v in 0..r {
                if u != v && count[u * r + v] != t {
                    return fail(format!("{} edges between {u} and {v}", count[u * r + v]));
                }
            }
        }
        Ok(())
    }

    pub fn vertices(&self) -> usize {
        self.r
    }

    pub fn multiplicity(&self) -> usize {
        self.t
    }

    pub fn darts(&self) -> usize {
        self.edge.len()
    }

    pub fn rotation(&self) -> &[u32] {
        &self.rotation
    }

    pub fn edge(&self) -> &[u32] {
        &self.edge
    }

    pub fn vertex_of(&self, d: u32) -> u32 {
        self.vertex_of[d as usize]
    }

    pub fn cycles(&self) -> &[Vec<u32>] {
        &self.cycles
    }

    /// Face permutation `d ↦ R(L(d))`.
    pub fn face_successor(&self, d: u32) -> u32 {
        self.rotation[self.edge[d as usize] as usize]
    }

    /// Canonical serialization; see [`fmt::Display`].
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for RotationSystem {
    /// Header `r t darts`, then `V v: …` per vertex starting at its lowest
    /// dart, then `E: d d'` per edge with `d < d'`, sorted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {} {}", self.r, self.t, self.darts())?;
        for (v, cyc) in self.cycles.iter().enumerate() {
            write!(f, "V {v}:")?;
            for d in cyc {
                write!(f, " {d}")?;
            }
            writeln!(f)?;
        }
        for (d, &e) in self.edge.iter().enumerate() {
            if (d as u32) < e {
                writeln!(f, "E: {d} {e}")?;
            }
        }
        Ok(())
    }
}

fn parse_num<T: FromStr>(tok: &str, line: usize) -> Result<T, RotationError> {
    tok.parse().map_err(|_| RotationError::Syntax {
        line,
        msg: format!("expected a number, found `{tok}`"),
    })
}

impl FromStr for RotationSystem {
    type Err = RotationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut header: Option<(usize, usize, usize)> = None;
        let mut cycles: Vec<Option<Vec<u32>>> = Vec::new();
        let mut edge: Vec<u32> = Vec::new();
        for (i, raw) in s.lines().enumerate() {
            let line = i + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let Some((r, t, n)) = header else {
                let toks: Vec<&str> = body.split_whitespace().collect();
                if toks.len() != 3 {
                    return Err(RotationError::Syntax {
                        line,
                        msg: "header must be `r t darts`".into(),
                    });
                }
                let (r, t, n): (usize, usize, usize) =
                    (parse_num(toks[0], line)?, parse_num(toks[1], line)?, parse_num(toks[2], line)?);
                if n > MAX_DARTS || r > n + 1 {
                    return Err(RotationError::TooLarge(n.max(r)));
                }
                header = Some((r, t, n));
                cycles = vec![None; r];
                edge = vec![u32::MAX; n];
                continue;
            };
            let _ = t;
            if let Some(rest) = body.strip_prefix("E:") {
                let toks: Vec<&str> = rest.split_whitespace().collect();
                if toks.len() != 2 {
                    return Err(RotationError::Syntax {
                        line,
                        msg: "edge line needs two darts".into(),
                    });
                }
                let (a, b): (u32, u32) = (parse_num(toks[0], line)?, parse_num(toks[1], line)?);
                for d in [a, b] {
                    if d as usize >= n {
                        return Err(RotationError::DartRange(d));
                    }
                    if edge[d as usize] != u32::MAX {
                        return Err(RotationError::Duplicate(d));
                    }
                }
                if a == b {
                    return Err(RotationError::BadPairing(a));
                }
                edge[a as usize] = b;
                edge[b as usize] = a;
            } else if let Some(rest) = body.strip_prefix('V') {
                let (v, darts) = rest.split_once(':').ok_or_else(|| RotationError::Syntax {
                    line,
                    msg: "vertex line must be `V v: d0 d1 …`".into(),
                })?;
                let v: usize = parse_num(v.trim(), line)?;
                if v >= r {
                    return Err(RotationError::Syntax {
                        line,
                        msg: format!("vertex {v} out of range"),
                    });
                }
                if cycles[v].is_some() {
                    return Err(RotationError::Syntax {
                        line,
                        msg: format!("vertex {v} listed twice"),
                    });
                }
                let ds = darts
                    .split_whitespace()
                    .map(|tok| parse_num(tok, line))
                    .collect::<Result<Vec<u32>, _>>()?;
                cycles[v] = Some(ds);
            } else {
                return Err(RotationError::Syntax {
                    line,
                    msg: "expected `V` or `E:` line".into(),
                });
            }
        }
        let Some((r, t, _)) = header else {
            return Err(RotationError::Syntax {
                line: 0,
                msg: "missing header".into(),
            });
        };
        if let Some(d) = edge.iter().position(|&e| e == u32::MAX) {
            return Err(RotationError::Missing(d as u32));
        }
        let found = cycles.iter().filter(|c| c.is_some()).count();
        if found != r {
            return Err(RotationError::VertexCount { expected: r, found });
        }
        RotationSystem::new(r, t, cycles.into_iter().flatten().collect(), edge)
    }
}

/// Propagates `base ↦ image` along `R` and `L`; returns the bijection if it
/// conjugates `(R_a, L_a)` to `(R_b, L_b)` on the component of `base`.
fn propagate(a: &RotationSystem, b: &RotationSystem, base: u32, image: u32) -> Option<Vec<u32>> {
    let n = a.darts();
    let mut map = vec![u32::MAX; n];
    let mut used = vec![false; n];
    map[base as usize] = image;
    used[image as usize] = true;
    let mut queue = VecDeque::from([base]);
    while let Some(d) = queue.pop_front() {
        let md = map[d as usize];
        for (next_a, next_b) in [
            (a.rotation[d as usize], b.rotation[md as usize]),
            (a.edge[d as usize], b.edge[md as usize]),
        ] {
            match map[next_a as usize] {
                u32::MAX => {
                    if used[next_b as usize] {
                        return None;
                    }
                    map[next_a as usize] = next_b;
                    used[next_b as usize] = true;
                    queue.push_back(next_a);
                }
                m if m != next_b => return None,
                _ => {}
            }
        }
    }
    Some(map)
}

/// A dart bijection `σ` with `σ R_a = R_b σ` and `σ L_a = L_b σ`, if one
/// exists. Assumes `⟨R, L⟩` is transitive, as it is for connected maps.
pub fn find_isomorphism(a: &RotationSystem, b: &RotationSystem) -> Option<Vec<u32>> {
    if a.darts() != b.darts() || a.r != b.r || a.t != b.t {
        return None;
    }
    if a.darts() == 0 {
        return Some(Vec::new());
    }
    (0..b.darts() as u32)
        .filter_map(|img| propagate(a, b, 0, img))
        .find(|m| m.iter().all(|&d| d != u32::MAX))
}

/// Code of the breadth-first relabelling from `base`: darts are numbered in
/// order of discovery, and the code lists `(R, L)` of each in that order.
fn relabel_code(rs: &RotationSystem, base: u32, best: Option<&[u32]>) -> Option<Vec<u32>> {
    let n = rs.darts();
    let mut label = vec![u32::MAX; n];
    let mut order = Vec::with_capacity(n);
    label[base as usize] = 0;
    order.push(base);
    let mut code = Vec::with_capacity(2 * n);
    let mut head = 0;
    let mut tie = true;
    while head < order.len() {
        let d = order[head];
        head += 1;
        for next in [rs.rotation[d as usize], rs.edge[d as usize]] {
            if label[next as usize] == u32::MAX {
                label[next as usize] = order.len() as u32;
                order.push(next);
            }
            let c = label[next as usize];
            if tie {
                if let Some(b) = best {
                    let k = code.len();
                    match c.cmp(&b[k]) {
                        std::cmp::Ordering::Greater => return None,
                        std::cmp::Ordering::Less => tie = false,
                        std::cmp::Ordering::Equal => {}
                    }
                }
            }
            code.push(c);
        }
    }
    if order.len() != n {
        // disconnected: fall back to listing unreached darts as absent
        code.resize(2 * n, u32::MAX);
    }
    Some(code)
}

/// A complete isomorphism invariant for connected rotation systems: the
/// least breadth-first relabelling code over all base darts.
pub fn canonical_code(rs: &RotationSystem) -> Vec<u32> {
    let mut best: Option<Vec<u32>> = None;
    for base in 0..rs.darts() as u32 {
        if let Some(c) = relabel_code(rs, base, best.as_deref()) {
            if best.as_ref().is_none_or(|b| c < *b) {
                best = Some(c);
            }
        }
    }
    best.unwrap_or_default()
}
