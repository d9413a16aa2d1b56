//! Todd–Coxeter coset enumeration over the trivial subgroup of a
//! two-generator presentation.
//!
//! The enumerator follows the HLT strategy (scan every relator from every
//! live coset, defining new cosets as needed) with immediate coincidence
//! processing. When the coset space fills up it runs a lookahead pass (scan
//! without defining) and compacts the table before giving up.

mod model;
mod presentation;

use std::collections::VecDeque;

use thiserror::Error;

use crate::grp::{Gen, Word};

pub use model::CosetTableModel;
pub use presentation::{Presentation, PresentationError};

const UNDEF: u32 = u32::MAX;

/// Column indices: `x`, `x⁻¹`, `y`, `y⁻¹`. The inverse of column `c` is `c ^ 1`.
pub const COL_X: usize = 0;
pub const COL_XI: usize = 1;
pub const COL_Y: usize = 2;
pub const COL_YI: usize = 3;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumError {
    #[error("invalid presentation: {0}")]
    Presentation(#[from] PresentationError),
    #[error("coset table is incomplete")]
    Incomplete,
    #[error("internal enumeration error: {0}")]
    Internal(String),
}

/// A complete, standardized coset table over the trivial subgroup: row `0`
/// is the subgroup itself and rows appear in breadth-first order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetTable {
    rows: Vec<[u32; 4]>,
}

impl CosetTable {
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn act(&self, coset: u32, col: usize) -> u32 {
        self.rows[coset as usize][col]
    }

    pub fn rows(&self) -> &[[u32; 4]] {
        &self.rows
    }

    /// Follows a word from `coset`.
    pub fn trace(&self, coset: u32, w: &Word) -> u32 {
        let mut c = coset;
        for &(g, e) in w.letters() {
            let col = column(g, e > 0);
            for _ in 0..e.unsigned_abs() {
                c = self.rows[c as usize][col];
            }
        }
        c
    }
}

/// Outcome of an enumeration: closed with a complete table, or inconclusive
/// because the coset limit was reached.
#[derive(Debug, Clone)]
pub enum Enumeration {
    Complete(CosetTable),
    Inconclusive { limit: usize, live: usize },
}

impl Enumeration {
    pub fn order(&self) -> Option<u64> {
        match self {
            Enumeration::Complete(t) => Some(t.len() as u64),
            Enumeration::Inconclusive { .. } => None,
        }
    }

    pub fn table(&self) -> Option<&CosetTable> {
        match self {
            Enumeration::Complete(t) => Some(t),
            Enumeration::Inconclusive { .. } => None,
        }
    }

    pub fn into_model(self) -> Option<CosetTableModel> {
        match self {
            Enumeration::Complete(t) => Some(CosetTableModel::new(t)),
            Enumeration::Inconclusive { .. } => None,
        }
    }
}

fn column(g: Gen, positive: bool) -> usize {
    match (g, positive) {
        (Gen::X, true) => COL_X,
        (Gen::X, false) => COL_XI,
        (Gen::Y, true) => COL_Y,
        (Gen::Y, false) => COL_YI,
    }
}

fn expand(w: &Word) -> Vec<u8> {
    let mut out = Vec::with_capacity(w.expanded_len() as usize);
    for &(g, e) in w.letters() {
        let col = column(g, e > 0) as u8;
        out.extend(std::iter::repeat_n(col, e.unsigned_abs() as usize));
    }
    out
}

/// Rewrites relators into an equivalent, cheaper set: if some relator is a
/// pure power `g^n`, every exponent of `g` is reduced into `(−n/2, n/2]`;
/// relators are cyclically reduced, deduplicated and sorted by length.
fn prepare(p: &Presentation) -> Vec<Vec<u8>> {
    let mut period = [0i64; 2];
    for r in p.relators() {
        if let [(g, e)] = r.letters() {
            let slot = &mut period[*g as usize];
            *slot = if *slot == 0 {
                e.abs()
            } else {
                gcd_i64(*slot, e.abs())
            };
        }
    }
    let mut out: Vec<Vec<u8>> = p
        .relators()
        .iter()
        .map(|r| {
            let reduced = Word::from_letters(r.letters().iter().map(|&(g, e)| {
                let n = period[g as usize];
                if n == 0 || r.letters().len() == 1 {
                    (g, e)
                } else {
                    let mut m = e.rem_euclid(n);
                    if 2 * m > n {
                        m -= n;
                    }
                    (g, m)
                }
            }));
            cyclic_reduce(expand(&reduced))
        })
        .filter(|r| !r.is_empty())
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out.dedup();
    out
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd_i64(b, a % b)
    }
}

fn cyclic_reduce(mut w: Vec<u8>) -> Vec<u8> {
    // free reduction first (reduced exponents may create cancellations)
    let mut stack: Vec<u8> = Vec::with_capacity(w.len());
    for c in w.drain(..) {
        if stack.last() == Some(&(c ^ 1)) {
            stack.pop();
        } else {
            stack.push(c);
        }
    }
    let (mut i, mut j) = (0, stack.len());
    while j > i + 1 && stack[i] == stack[j - 1] ^ 1 {
        i += 1;
        j -= 1;
    }
    stack[i..j].to_vec()
}

/// Lookahead passes allowed in one enumeration before giving up.
const MAX_LOOKAHEADS: usize = 256;

struct Enumerator {
    table: Vec<[u32; 4]>,
    parent: Vec<u32>,
    queue: Vec<u32>,
    live: usize,
    limit: usize,
}

impl Enumerator {
    fn new(limit: usize) -> Self {
        Self {
            table: vec![[UNDEF; 4]],
            parent: vec![0],
            queue: Vec::new(),
            live: 1,
            limit,
        }
    }

    #[inline]
    fn alive(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut r = c;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        let mut c = c;
        while self.parent[c as usize] != r {
            let next = self.parent[c as usize];
            self.parent[c as usize] = r;
            c = next;
        }
        r
    }

    fn define(&mut self, c: u32, col: usize) {
        let d = self.table.len() as u32;
        self.table.push([UNDEF; 4]);
        self.parent.push(d);
        self.live += 1;
        self.table[c as usize][col] = d;
        self.table[d as usize][col ^ 1] = c;
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.rep(a), self.rep(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi as usize] = lo;
            self.queue.push(hi);
            self.live -= 1;
        }
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let g = self.queue[i];
            i += 1;
            for col in 0..4 {
                let d = self.table[g as usize][col];
                if d == UNDEF {
                    continue;
                }
                self.table[d as usize][col ^ 1] = UNDEF;
                let m = self.rep(g);
                let n = self.rep(d);
                let mx = self.table[m as usize][col];
                if mx != UNDEF {
                    self.merge(n, mx);
                } else {
                    let nx = self.table[n as usize][col ^ 1];
                    if nx != UNDEF {
                        self.merge(m, nx);
                    } else {
                        self.table[m as usize][col] = n;
                        self.table[n as usize][col ^ 1] = m;
                    }
                }
            }
        }
    }

    /// Scans `w` from `c`; defines new cosets when `fill` is set.
    fn scan(&mut self, c: u32, w: &[u8], fill: bool) {
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0usize, w.len());
        loop {
            while i < j {
                let n = self.table[f as usize][w[i] as usize];
                if n == UNDEF {
                    break;
                }
                f = n;
                i += 1;
            }
            if i == j {
                if f != b {
                    self.coincidence(f, b);
                }
                return;
            }
            while j > i {
                let n = self.table[b as usize][(w[j - 1] ^ 1) as usize];
                if n == UNDEF {
                    break;
                }
                b = n;
                j -= 1;
            }
            if j == i {
                self.coincidence(f, b);
                return;
            }
            if j == i + 1 {
                let col = w[i] as usize;
                self.table[f as usize][col] = b;
                self.table[b as usize][col ^ 1] = f;
                return;
            }
            if !fill {
                return;
            }
            self.define(f, w[i] as usize);
        }
    }

    /// Drops dead rows, renumbering live ones in order; returns the new
    /// number of the coset `track`.
    fn compact(&mut self, track: u32) -> u32 {
        let n = self.table.len();
        let mut new_id = vec![UNDEF; n];
        let mut next = 0u32;
        for (c, slot) in new_id.iter_mut().enumerate() {
            if self.parent[c] == c as u32 {
                *slot = next;
                next += 1;
            }
        }
        let mut table = Vec::with_capacity(next as usize);
        for c in 0..n {
            if new_id[c] == UNDEF {
                continue;
            }
            let mut row = self.table[c];
            for e in row.iter_mut() {
                if *e != UNDEF {
                    *e = new_id[*e as usize];
                    debug_assert!(*e != UNDEF, "live row points at a dead coset");
                }
            }
            table.push(row);
        }
        self.table = table;
        self.parent = (0..next).collect();
        self.live = next as usize;
        // `track` itself may be dead: advance to the next live coset
        let mut t = track as usize;
        while t < n && new_id[t] == UNDEF {
            t += 1;
        }
        if t < n {
            new_id[t]
        } else {
            next
        }
    }

    fn lookahead(&mut self, rels: &[Vec<u8>]) {
        let mut c = 0u32;
        while (c as usize) < self.table.len() {
            if self.alive(c) {
                for r in rels {
                    self.scan(c, r, false);
                    if !self.alive(c) {
                        break;
                    }
                }
            }
            c += 1;
        }
    }

    /// After a complete scan of `g^n` from `c`, every coset on the `g`-cycle
    /// through `c` satisfies the relator too; coincidences only shorten
    /// closed cycles, so the marks stay valid until renumbering.
    fn mark_cycle(&self, c: u32, col: usize, done: &mut Vec<bool>) {
        let mut d = c;
        loop {
            let next = self.table[d as usize][col];
            if next == UNDEF || !self.alive(next) {
                // not provably closed: leave it to ordinary scans
                return;
            }
            d = next;
            if d == c {
                break;
            }
        }
        if done.len() < self.table.len() {
            done.resize(self.table.len(), false);
        }
        loop {
            done[d as usize] = true;
            d = self.table[d as usize][col];
            if d == c {
                return;
            }
        }
    }

    fn run(&mut self, rels: &[Vec<u8>]) -> bool {
        // relators g^n, scanned once per g-cycle rather than once per coset
        let power_col: Vec<Option<usize>> = rels
            .iter()
            .map(|r| (r.len() > 1 && r.iter().all(|&x| x == r[0])).then_some(r[0] as usize))
            .collect();
        let mut done: Vec<Vec<bool>> = vec![Vec::new(); rels.len()];
        let max_len = rels.iter().map(Vec::len).max().unwrap_or(0) + 4;
        let mut lookaheads = 0;
        let mut c = 0u32;
        while (c as usize) < self.table.len() {
            if self.table.len() + max_len > self.limit {
                done.iter_mut().for_each(Vec::clear);
                c = self.compact(c);
                if self.table.len() + max_len > self.limit {
                    if lookaheads >= MAX_LOOKAHEADS {
                        return false;
                    }
                    lookaheads += 1;
                    let before = self.live;
                    self.lookahead(rels);
                    c = self.compact(c);
                    // a pass that frees too little still helps the next one;
                    // give up only when a whole pass finds nothing
                    if self.live == before {
                        return false;
                    }
                }
                continue;
            }
            if self.alive(c) {
                for (k, r) in rels.iter().enumerate() {
                    let power = power_col[k];
                    if power.is_some() && done[k].get(c as usize).copied().unwrap_or(false) {
                        continue;
                    }
                    self.scan(c, r, true);
                    if !self.alive(c) {
                        break;
                    }
                    if let Some(col) = power {
                        self.mark_cycle(c, col, &mut done[k]);
                    }
                }
                if self.alive(c) {
                    for col in 0..4 {
                        if self.table[c as usize][col] == UNDEF {
                            self.define(c, col);
                        }
                    }
                }
            }
            c += 1;
        }
        true
    }

    /// Compacts and renumbers breadth-first from coset 0.
    fn standardize(mut self) -> Vec<[u32; 4]> {
        self.compact(0);
        let n = self.table.len();
        let mut new_id = vec![UNDEF; n];
        let mut order = Vec::with_capacity(n);
        let mut queue = VecDeque::from([0u32]);
        new_id[0] = 0;
        while let Some(c) = queue.pop_front() {
            order.push(c);
            for col in 0..4 {
                let d = self.table[c as usize][col];
                if new_id[d as usize] == UNDEF {
                    new_id[d as usize] = order.len() as u32 + queue.len() as u32;
                    queue.push_back(d);
                }
            }
        }
        order
            .iter()
            .map(|&c| self.table[c as usize].map(|d| new_id[d as usize]))
            .collect()
    }
}

/// Default coset limit for a group of expected order `n`.
pub fn default_limit(expected_order: u64) -> usize {
    (expected_order.saturating_mul(20)).clamp(1024, 1 << 26) as usize
}

/// Enumerates the cosets of the trivial subgroup. Never reports a wrong
/// order: if the limit is hit the result is [`Enumeration::Inconclusive`].
pub fn enumerate_cosets(p: &Presentation, limit: usize) -> Result<Enumeration, EnumError> {
    let rels = prepare(p);
    let mut e = Enumerator::new(limit.max(2));
    if !e.run(&rels) {
        return Ok(Enumeration::Inconclusive {
            limit,
            live: e.live,
        });
    }
    let rows = e.standardize();
    let table = CosetTable { rows };
    verify_closed(&table, p)?;
    Ok(Enumeration::Complete(table))
}

/// Every relator must trace to a loop at every coset, and the table must be
/// a permutation representation.
fn verify_closed(t: &CosetTable, p: &Presentation) -> Result<(), EnumError> {
    let n = t.len() as u32;
    for c in 0..n {
        for col in 0..4 {
            let d = t.act(c, col);
            if d >= n || t.act(d, col ^ 1) != c {
                return Err(EnumError::Internal(format!(
                    "column {col} is not a permutation at coset {c}"
                )));
            }
        }
    }
    for r in p.relators() {
        for c in 0..n {
            if t.trace(c, r) != c {
                return Err(EnumError::Internal(format!(
                    "relator `{r}` does not close at coset {c}"
                )));
            }
        }
    }
    Ok(())
}

/// Order of a generator's permutation on a complete table.
pub fn order_of_generator(e: &Enumeration, g: Gen) -> Result<u64, EnumError> {
    let t = e.table().ok_or(EnumError::Incomplete)?;
    let col = column(g, true);
    let n = t.len();
    let mut seen = vec![false; n];
    let mut order: u64 = 1;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut len = 0u64;
        let mut c = s as u32;
        while !seen[c as usize] {
            seen[c as usize] = true;
            c = t.act(c, col);
            len += 1;
        }
        order = lcm(order, len);
    }
    Ok(order)
}

fn lcm(a: u64, b: u64) -> u64 {
    a / crate::ffield::gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(text: &str) -> Presentation {
        text.parse().unwrap()
    }

    fn order(text: &str) -> Option<u64> {
        let p = pres(text);
        enumerate_cosets(&p, 100_000).unwrap().order()
    }

    #[test]
    fn trivial_and_cyclic() {
        assert_eq!(order("x\ny"), Some(1));
        assert_eq!(order("x^5\ny\n"), Some(5));
        assert_eq!(order("x^4\ny^6\nx^-1 y^-1 x y"), Some(24));
    }

    #[test]
    fn small_nonabelian_groups() {
        // S3, D_8, Q_8, A_4 (via (2,3,3)), S_4 (2,3,4), A_5 (2,3,5)
        assert_eq!(order("x^2\ny^3\nx y x y"), Some(6));
        assert_eq!(order("x^2\ny^4\nx y x y"), Some(8));
        assert_eq!(order("x^4\nx^2 y^-2\ny^-1 x y x"), Some(8));
        assert_eq!(order("x^2\ny^3\n(x y)^3".replace("(x y)^3", "x y x y x y").as_str()), Some(12));
        assert_eq!(order("x^2\ny^3\nx y x y x y x y"), Some(24));
        assert_eq!(order("x^2\ny^3\nx y x y x y x y x y"), Some(60));
    }

    #[test]
    fn inconclusive_for_infinite_group() {
        let p = pres("x y x^-1 y^-1");
        let r = enumerate_cosets(&p, 5_000).unwrap();
        assert!(matches!(r, Enumeration::Inconclusive { .. }));
        assert!(order_of_generator(&r, Gen::X).is_err());
    }

    #[test]
    fn generator_orders() {
        let p = pres("x^2\ny^3\nx y x y x y x y x y");
        let e = enumerate_cosets(&p, 100_000).unwrap();
        assert_eq!(order_of_generator(&e, Gen::X).unwrap(), 2);
        assert_eq!(order_of_generator(&e, Gen::Y).unwrap(), 3);
        let triv = enumerate_cosets(&pres("x\ny"), 10).unwrap();
        assert_eq!(order_of_generator(&triv, Gen::Y).unwrap(), 1);
    }

    #[test]
    fn determinism() {
        let p = pres("x^2\ny^3\nx y x y x y x y x y");
        let a = enumerate_cosets(&p, 100_000).unwrap();
        let b = enumerate_cosets(&p, 100_000).unwrap();
        assert_eq!(a.table(), b.table());
    }

    #[test]
    fn tight_limit_still_closes_or_is_inconclusive() {
        let p = pres("x^2\ny^3\nx y x y x y x y x y");
        for limit in [30, 60, 61, 80, 120, 400] {
            match enumerate_cosets(&p, limit).unwrap() {
                Enumeration::Complete(t) => assert_eq!(t.len(), 60),
                Enumeration::Inconclusive { .. } => {}
            }
        }
    }

    #[test]
    fn preparation_reduces_exponents() {
        let p = pres("y^10\nx^3 y^-8");
        let rels = prepare(&p);
        assert!(rels.iter().any(|r| r.len() == 5));
    }
}
