//! Test-only oracles. Nothing here calls the library's arithmetic: dimension
//! types are read through their public entries and re-expanded into plain
//! functions on the Bockstein basis.

#![allow(dead_code)]

use dimcalc::{Decoration, DecoratedNumber, DimensionType, ExtNat};
use rand::Rng;

pub const ORACLE_PRIMES: [u64; 5] = [2, 3, 5, 7, 11];
pub const EXCEPTION_PRIMES: [u64; 4] = [2, 3, 5, 7];

/// `(D(Z_p), D(Z_p^inf), D(Z_(p)))` for finite values, straight from the
/// regular / p+ / p- singular definitions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Triple {
    pub cyclic: u64,
    pub circle: u64,
    pub local: u64,
}

/// A dimension type as a finite table: `D(Q)` plus one triple per oracle prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub q: u64,
    pub at: Vec<(u64, Triple)>,
}

fn fin(n: ExtNat) -> u64 {
    n.finite().expect("oracle handles finite values only")
}

pub fn triple(q: u64, base: u64, sign: i8) -> Triple {
    match sign {
        0 => Triple { cyclic: base, circle: base, local: base },
        1 => Triple { cyclic: base, circle: base, local: q.max(base + 1) },
        _ => Triple { cyclic: base, circle: base - 1, local: q.max(base - 1 + 1) },
    }
}

fn sign_of(d: Decoration) -> i8 {
    match d {
        Decoration::Minus => -1,
        Decoration::None => 0,
        Decoration::Plus => 1,
    }
}

pub fn table(d: &DimensionType) -> Table {
    let q = fin(d.q());
    Table {
        q,
        at: ORACLE_PRIMES
            .iter()
            .map(|&p| {
                let e = d.entry(p);
                (p, triple(q, fin(e.base()), sign_of(e.decoration())))
            })
            .collect(),
    }
}

/// Checks the dimension-type condition on every prime of the table.
pub fn is_dimension_type(t: &Table) -> bool {
    t.at.iter().all(|(_, x)| {
        let regular = x.cyclic == t.q && x.circle == t.q && x.local == t.q;
        let singular = x.local == t.q.max(x.circle + 1)
            && (x.circle == x.cyclic || x.circle + 1 == x.cyclic);
        regular || singular
    })
}

/// Recovers `(base, sign)` from a triple: 0 regular, +1 plus, -1 minus.
pub fn classify(q: u64, x: Triple) -> (u64, i8) {
    if x.cyclic == q && x.circle == q && x.local == q {
        (x.cyclic, 0)
    } else if x.circle == x.cyclic {
        (x.cyclic, 1)
    } else {
        (x.cyclic, -1)
    }
}

fn sign_product(a: i8, b: i8) -> i8 {
    match (a, b) {
        (0, s) | (s, 0) => s,
        (1, 1) => 1,
        _ => -1,
    }
}

pub fn oracle_boxplus(a: &Table, b: &Table) -> Table {
    let q = a.q + b.q;
    Table {
        q,
        at: a
            .at
            .iter()
            .zip(&b.at)
            .map(|((p, x), (_, y))| {
                let (n, s) = classify(a.q, *x);
                let (m, t) = classify(b.q, *y);
                (*p, triple(q, n + m, sign_product(s, t)))
            })
            .collect(),
    }
}

pub fn oracle_star(a: &Table) -> Table {
    Table {
        q: a.q,
        at: a
            .at
            .iter()
            .map(|(p, x)| {
                let (n, s) = classify(a.q, *x);
                (*p, triple(a.q, n, -s))
            })
            .collect(),
    }
}

pub fn oracle_oplus(a: &Table, b: &Table) -> Table {
    oracle_star(&oracle_boxplus(&oracle_star(a), &oracle_star(b)))
}

/// Pointwise order over `Q` and all three groups at every oracle prime.
pub fn pointwise_leq(a: &Table, b: &Table) -> bool {
    a.q <= b.q
        && a.at.iter().zip(&b.at).all(|((_, x), (_, y))| {
            x.cyclic <= y.cyclic && x.circle <= y.circle && x.local <= y.local
        })
}

pub fn oracle_dim(t: &Table) -> u64 {
    t.at.iter()
        .flat_map(|(_, x)| [x.cyclic, x.circle, x.local])
        .fold(t.q, u64::max)
}

// ---- random generation -------------------------------------------------------

fn random_entry(rng: &mut impl Rng, q: u64, max_base: u64, allow_zero_plus: bool) -> DecoratedNumber {
    loop {
        let e = match rng.gen_range(0..3) {
            0 => DecoratedNumber::new(rng.gen_range(0..=max_base), Decoration::Minus),
            1 => Ok(DecoratedNumber::plain(q)),
            _ => DecoratedNumber::new(rng.gen_range(0..=max_base), Decoration::Plus),
        };
        match e {
            Ok(e) if allow_zero_plus || e != DecoratedNumber::new(0, Decoration::Plus).unwrap() => {
                return e
            }
            _ => continue,
        }
    }
}

/// Random valid type, bases `≤ max_base`, exceptions among [`EXCEPTION_PRIMES`].
/// With `star_safe` no entry is `0+`, so `star` is defined.
pub fn random_type(rng: &mut impl Rng, max_base: u64, star_safe: bool) -> DimensionType {
    let q = rng.gen_range(0..=max_base);
    let mut d = DimensionType::uniform(q, random_entry(rng, q, max_base, !star_safe)).unwrap();
    for p in EXCEPTION_PRIMES {
        if rng.gen_bool(0.35) {
            d = d
                .with_entry(p, random_entry(rng, q, max_base, !star_safe))
                .unwrap();
        }
    }
    d
}

// ---- determinantal divisors ---------------------------------------------------

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn det(m: &[Vec<i128>]) -> i128 {
    // Laplace expansion; matrices here are at most 4x4
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0];
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i128>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, v)| *v).collect())
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] * det(&minor)
        })
        .sum()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// `(rank, invariant factors)` of `Z^rows / column span`, from gcds of minors.
pub fn determinantal_classification(rows: &[Vec<i64>]) -> (usize, Vec<u64>) {
    let r = rows.len();
    let c = rows.first().map_or(0, Vec::len);
    let mut divisors = vec![1i128];
    for k in 1..=r.min(c) {
        let mut g = 0i128;
        for rs in subsets(r, k) {
            for cs in subsets(c, k) {
                let minor: Vec<Vec<i128>> = rs
                    .iter()
                    .map(|&i| cs.iter().map(|&j| rows[i][j] as i128).collect())
                    .collect();
                g = gcd(g, det(&minor));
            }
        }
        if g == 0 {
            break;
        }
        divisors.push(g);
    }
    let matrix_rank = divisors.len() - 1;
    let factors = divisors
        .windows(2)
        .map(|w| (w[1] / w[0]) as u64)
        .filter(|&d| d != 1)
        .collect();
    (r - matrix_rank, factors)
}
