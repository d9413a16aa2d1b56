//! Expected values computed directly from the published formulas, with no
//! reference to the construction code. Shared by the integration tests.

#![allow(dead_code)]

use std::fmt::Write as _;

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn phi(n: u64) -> u64 {
    (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64
}

/// `(p, k)` with `q = p^k`, or `None`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let (mut m, mut k) = (q, 0);
    while m % p == 0 {
        m /= p;
        k += 1;
    }
    (m == 1).then_some((p, k))
}

/// Number of orientably-regular embeddings of `K_q^{(t)}`.
pub fn expected_count(q: u64, t: u64) -> usize {
    let Some((_, k)) = prime_power(q) else { return 0 };
    match q {
        2 => dipole_solutions(t).len(),
        3 => (t % 2 == 1) as usize,
        4 => match t % 4 {
            0 => 4,
            2 => 2,
            _ => 1,
        },
        _ if q % 2 == 1 && t % 2 == 0 => 0,
        _ => {
            let base = (phi(q - 1) / k as u64) as usize;
            if t % 2 == 0 {
                2 * base
            } else {
                base
            }
        }
    }
}

/// Residues `f` mod `t` with `f² ≡ 1`.
pub fn dipole_solutions(t: u64) -> Vec<u64> {
    (0..t).filter(|&f| (f * f) % t == 1 % t).collect()
}

/// `2^{r+s}` with `r` the number of odd prime factors of `t` and `s` from
/// the power of two dividing `t`.
pub fn dipole_count_formula(t: u64) -> usize {
    let mut m = t;
    while m % 2 == 0 {
        m /= 2;
    }
    let mut r = 0;
    let mut p = 3;
    while p * p <= m {
        if m % p == 0 {
            r += 1;
            while m % p == 0 {
                m /= p;
            }
        }
        p += 2;
    }
    if m > 1 {
        r += 1;
    }
    let s = if t % 8 == 0 {
        2
    } else if t % 4 == 0 {
        1
    } else {
        0
    };
    1 << (r + s)
}

pub fn residue(a: i64, t: u64) -> u64 {
    a.rem_euclid(t as i64) as u64
}

/// One expected row of the grouped table view.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Row {
    pub q: u64,
    pub t: u64,
    pub param: String,
    pub m: u64,
    pub n: u64,
    pub genus: u64,
    pub count: usize,
}

/// Rows for `q > 4`: families, values of `a` and types by the case split
/// on `q` and `t`; genera from the two closed formulas.
pub fn table_general(q: u64, t: u64) -> Vec<Row> {
    let (_, k) = prime_power(q).expect("prime power");
    let n = (q - 1) * t;
    let count = (phi(q - 1) / k as u64) as usize;
    let ti = t as i64;
    let full = |variant: &str, a: i64| Row {
        q,
        t,
        param: format!("{variant} a={}", residue(a, t)),
        m: n,
        n,
        // g = 1 − q + q(q−1)t/4
        genus: ((4 - 4 * q as i64 + (q * (q - 1) * t) as i64) / 4) as u64,
        count,
    };
    let half = |variant: &str, a: i64| Row {
        q,
        t,
        param: format!("{variant} a={}", residue(a, t)),
        m: n / 2,
        n,
        // g = 1 − 3q/2 + q(q−1)t/4
        genus: ((4 - 6 * q as i64 + (q * (q - 1) * t) as i64) / 4) as u64,
        count,
    };
    let mut rows = Vec::new();
    if q % 2 == 0 {
        rows.push(full("M0", -1));
        if t % 4 == 0 {
            rows.push(full("M1", ti / 2 - 1));
        } else if t % 4 == 2 {
            rows.push(half("M1", ti / 2 - 1));
        }
    } else if t % 2 == 1 {
        if q % 4 == 1 {
            rows.push(full("M2", -1));
        } else {
            rows.push(half("M2", (ti - 1) / 2));
        }
    }
    rows
}

/// `q = 3`, odd `t`.
pub fn table_three(t: u64) -> Vec<Row> {
    if t % 2 == 0 {
        return Vec::new();
    }
    let (m, genus) = if t % 3 == 0 { (t, (3 * t - 7) / 2) } else { (3 * t, (3 * t - 3) / 2) };
    vec![Row {
        q: 3,
        t,
        param: format!("M2 a={}", residue((t as i64 - 3) / 2, t)),
        m,
        n: 2 * t,
        genus,
        count: 1,
    }]
}

/// `q = 4`: the nine rows by residue of `t` mod 16.
pub fn table_four(t: u64) -> Vec<Row> {
    let ti = t as i64;
    let row = |variant: &str, a: i64, m: u64, genus: u64| Row {
        q: 4,
        t,
        param: format!("{variant} a={}", residue(a, t)),
        m,
        n: 3 * t,
        genus,
        count: 1,
    };
    let full = |v: &str, a: i64| row(v, a, 3 * t, 3 * t - 3);
    let half = |v: &str, a: i64| row(v, a, 3 * t / 2, 3 * t - 5);
    let quarter = |v: &str, a: i64| row(v, a, 3 * t / 4, 3 * t - 9);
    let mut rows = vec![full("q4A", -1)];
    if t % 4 == 0 {
        rows.push(full("q4A", ti / 2 - 1));
    }
    if t % 4 == 2 {
        rows.push(half("q4A", ti / 2 - 1));
    }
    if t % 8 == 0 {
        rows.push(full("q4B", ti / 4 - 1));
        rows.push(full("q4B", 3 * ti / 4 - 1));
    }
    match t % 16 {
        12 => {
            rows.push(half("q4B", ti / 4 - 1));
            rows.push(quarter("q4B", 3 * ti / 4 - 1));
        }
        4 => {
            rows.push(quarter("q4B", ti / 4 - 1));
            rows.push(half("q4B", 3 * ti / 4 - 1));
        }
        _ => {}
    }
    rows
}

/// Renders rows exactly like the atlas table view.
pub fn render(rows: &[Row]) -> String {
    let mut rows = rows.to_vec();
    rows.sort();
    let mut s = String::new();
    for r in rows {
        let _ = writeln!(s, "q={} t={} {} {{{},{}}} g={} x{}", r.q, r.t, r.param, r.m, r.n, r.genus, r.count);
    }
    s
}

/// Dipole genus `(t − gcd(f+1, t))/2` and face length `2t/gcd(f+1, t)`.
pub fn dipole_genus(t: u64, f: u64) -> u64 {
    (t - gcd(f + 1, t)) / 2
}

pub fn dipole_face(t: u64, f: u64) -> u64 {
    2 * t / gcd(f + 1, t)
}

/// Chirality by the published case split; `None` outside its scope.
pub fn expected_chiral(q: u64, t: u64) -> Option<bool> {
    match q {
        2 | 4 => Some(false),
        3 if t % 2 == 1 => Some(false),
        _ if q >= 8 && q % 2 == 0 => Some(true),
        _ if q >= 5 && q % 2 == 1 && t % 2 == 1 => Some(true),
        _ => None,
    }
}

/// Self-duality by the published case split. `a` is the residue mod `t`,
/// `f` the dipole parameter.
pub fn expected_self_dual(q: u64, t: u64, a: u64, f: Option<u64>) -> bool {
    let ti = t as i64;
    match q {
        2 => {
            let f = f.expect("dipole");
            (t % 2 == 0 && f == 1 % t) || (t % 8 == 0 && f == residue(1 + ti / 2, t))
        }
        4 => {
            a == residue(-1, t)
                || (t % 4 == 0 && a == residue(ti / 2 - 1, t))
                || (t % 16 == 8 && (a == residue(ti / 4 - 1, t) || a == residue(-ti / 4 - 1, t)))
        }
        5 | 9 => t % 2 == 1,
        _ => false,
    }
}

/// Number of Wilson orbits; `None` for counts the statement does not cover.
pub fn expected_wilson_orbits(q: u64, t: u64) -> Option<usize> {
    if q == 2 {
        return Some(expected_count(2, t));
    }
    if t % 2 == 1 {
        Some(1)
    } else if q % 2 == 0 && q > 4 || q == 4 && t % 4 == 2 {
        Some(2)
    } else if q == 4 && t % 4 == 0 {
        Some(3)
    } else {
        None
    }
}

/// One checked-in table: the pairs it covers and its expected rows.
pub struct GoldenTable {
    pub file: &'static str,
    pub qs: Vec<u64>,
    pub ts: Vec<u64>,
    pub rows: Vec<Row>,
}

pub fn golden_tables() -> Vec<GoldenTable> {
    let general_qs = vec![5, 7, 8, 9, 13, 16];
    let general_ts: Vec<u64> = (1..=8).collect();
    let three_ts = vec![1, 3, 5, 7, 9];
    let four_ts = vec![1, 2, 3, 4, 6, 8, 12, 16, 20, 28];
    vec![
        GoldenTable {
            file: "general.txt",
            rows: general_qs
                .iter()
                .flat_map(|&q| general_ts.iter().flat_map(move |&t| table_general(q, t)))
                .collect(),
            qs: general_qs,
            ts: general_ts,
        },
        GoldenTable {
            file: "q3.txt",
            rows: three_ts.iter().flat_map(|&t| table_three(t)).collect(),
            qs: vec![3],
            ts: three_ts,
        },
        GoldenTable {
            file: "q4.txt",
            rows: four_ts.iter().flat_map(|&t| table_four(t)).collect(),
            qs: vec![4],
            ts: four_ts,
        },
    ]
}

pub fn golden_path(file: &str) -> std::path::PathBuf {
    std::path::PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(file)
}
