//! Closed forms, recurrences and triangles, all in exact arithmetic.
//!
//! Range conventions, for every family in one place:
//!
//! | table        | indices                    | zero outside                         |
//! |--------------|----------------------------|--------------------------------------|
//! | `T`          | `n >= 1`, `a`, `b >= -1`   | `a >= n`, `b >= a`                   |
//! | `E000`       | `n, k >= 0`                | `k > n`, `k < ceil(n/2)`             |
//! | `simsun`     | `n, k >= 0`                | `k > floor(n/2)`                     |
//! | `entringer`  | `n >= 1`, `0 <= k <= n`    | `k = 0`                              |
//! | `stirling`   | `n, k >= 0`                | `k > n`, `k = 0 < n`                 |
//! | `callan`     | `n, k >= 0`                | `k > n`, `k = 0 < n`                 |
//! | `Y`          | `n >= 1`, `1 <= k <= n`    | everything else                      |
//!
//! Queries outside a table's stored range return zero.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::series;

/// One index of a [`CountTable`], with its inclusive range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dim {
    /// Index name used in CSV headers.
    pub name: &'static str,
    /// Smallest stored index (may be -1).
    pub min: i64,
    /// Largest stored index.
    pub max: i64,
}

impl Dim {
    fn len(&self) -> usize {
        (self.max - self.min + 1).max(0) as usize
    }
}

/// A dense table of exact nonnegative integers over a box of indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    /// Family identifier (`T`, `E000`, ...).
    pub name: String,
    /// Index ranges, outermost first.
    pub dims: Vec<Dim>,
    cells: Vec<BigUint>,
}

impl CountTable {
    fn new(name: &str, dims: Vec<Dim>) -> Self {
        let size = dims.iter().map(Dim::len).product();
        Self { name: name.into(), dims, cells: vec![BigUint::zero(); size] }
    }

    fn offset(&self, index: &[i64]) -> Option<usize> {
        if index.len() != self.dims.len() {
            return None;
        }
        let mut off = 0usize;
        for (d, &i) in self.dims.iter().zip(index) {
            if i < d.min || i > d.max {
                return None;
            }
            off = off * d.len() + (i - d.min) as usize;
        }
        Some(off)
    }

    /// Cell at `index`; zero when out of range.
    pub fn get(&self, index: &[i64]) -> BigUint {
        self.offset(index).map(|o| self.cells[o].clone()).unwrap_or_default()
    }

    /// Shorthand for two-index tables.
    pub fn at(&self, n: i64, k: i64) -> BigUint {
        self.get(&[n, k])
    }

    fn set(&mut self, index: &[i64], value: BigUint) {
        let o = self.offset(index).expect("index in range");
        self.cells[o] = value;
    }

    /// Every cell with its index tuple, in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (Vec<i64>, &BigUint)> + '_ {
        self.cells.iter().enumerate().map(move |(mut o, v)| {
            let mut idx = vec![0i64; self.dims.len()];
            for (slot, d) in idx.iter_mut().zip(&self.dims).rev() {
                *slot = d.min + (o % d.len()) as i64;
                o /= d.len();
            }
            (idx, v)
        })
    }

    /// Sum of the cells whose first index is `n`.
    pub fn row_sum(&self, n: i64) -> BigUint {
        self.entries().filter(|(i, _)| i[0] == n).map(|(_, v)| v).sum()
    }
}

fn dim(name: &'static str, min: i64, max: i64) -> Dim {
    Dim { name, min, max }
}

/// `n!`.
pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// Binomial coefficient; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    // each partial product is itself a binomial coefficient, so the division is exact
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `C(2n, n) / (n + 1)`.
pub fn catalan(n: u64) -> BigUint {
    binomial(2 * n, n) / (n + 1)
}

/// `|I_n(012)|` from `a_n = 3 a_{n-1} - a_{n-2}`, `a_1 = 1`, `a_2 = 2`
/// (odd-indexed Fibonacci numbers). `n = 0` gives 1.
pub fn count_012(n: usize) -> BigUint {
    let (mut prev, mut cur) = (BigUint::one(), BigUint::one());
    for _ in 1..n {
        let next = &cur * 3u32 - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `|I_1(021)|, ..., |I_{n_max}(021)|` via `c_n = c_{n-1} + sum_{j=1}^{n-1} c_j c_{n-j}`.
pub fn sequence_021(n_max: usize) -> Vec<BigUint> {
    let mut c: Vec<BigUint> = vec![BigUint::zero(); n_max + 1];
    for n in 1..=n_max {
        c[n] = if n == 1 {
            BigUint::one()
        } else {
            let conv: BigUint = (1..n).map(|j| &c[j] * &c[n - j]).sum();
            &c[n - 1] + conv
        };
    }
    c.remove(0);
    c
}

/// `|I_n(021)|`; `n = 0` gives 1.
pub fn count_021(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    sequence_021(n).pop().expect("n >= 1")
}

/// Large Schröder number `r_n = |I_{n+1}(021)|`.
pub fn schroder(n: usize) -> BigUint {
    count_021(n + 1)
}

/// `r_n` read off the series solution of `R = 1 + x R + x R^2`.
pub fn schroder_by_series(n: usize) -> BigUint {
    series::schroder_series(n).coeff(n).to_biguint().expect("nonnegative")
}

/// `T_{n,a,b}`: 210-avoiders of length `n` with `top = a`, `bottom = b`,
/// for `1 <= n <= n_max`. The `b = -1` column holds the weakly increasing
/// sequences, `(n - a)/n * C(n - 1 + a, a)` of them.
pub fn table_top_bottom(n_max: usize) -> CountTable {
    let nm = n_max as i64;
    let mut t = CountTable::new(
        "T",
        vec![dim("n", 1, nm), dim("a", 0, (nm - 1).max(0)), dim("b", -1, (nm - 2).max(-1))],
    );
    for n in 1..=nm {
        for a in 0..n {
            let num = binomial((n - 1 + a) as u64, a as u64) * (n - a) as u64;
            debug_assert!((&num % n as u64).is_zero());
            t.set(&[n, a, -1], num / n as u64);
            if n == 1 {
                continue;
            }
            for b in 0..a {
                let same_top: BigUint = (-1..=b).map(|i| t.get(&[n - 1, a, i])).sum();
                let same_bottom: BigUint = (b + 1..=a).map(|j| t.get(&[n - 1, j, b])).sum();
                t.set(&[n, a, b], same_top + same_bottom);
            }
        }
    }
    t
}

/// `|I_n(201)| = |I_n(210)| = Catalan(n) + sum_{a} sum_{b=0}^{a-1} T_{n,a,b}`.
pub fn count_201_210(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    let t = table_top_bottom(n);
    let n = n as i64;
    let rest: BigUint = (0..n).flat_map(|a| (0..a).map(move |b| (a, b))).map(|(a, b)| t.get(&[n, a, b])).sum();
    catalan(n as u64) + rest
}

/// `|I_n(102)|` as the coefficient of `x^n` in `A = 1 + (x - x^2) A^3`.
pub fn count_102(n: usize) -> BigUint {
    series::series_102(n).coeff(n).to_biguint().expect("nonnegative")
}

/// `E_{n,k}`: 000-avoiders of length `n` with `k` distinct entries.
pub fn table_distinct_000(n_max: usize) -> CountTable {
    let nm = n_max as i64;
    let mut t = CountTable::new("E000", vec![dim("n", 0, nm), dim("k", 0, nm)]);
    t.set(&[0, 0], BigUint::one());
    for n in 1..=nm {
        for k in (n + 1) / 2..=n {
            let fresh = t.at(n - 1, k - 1) * (n - k + 1) as u64;
            let repeat = t.at(n - 1, k) * (2 * k - n + 1) as u64;
            t.set(&[n, k], fresh + repeat);
        }
    }
    t
}

/// `|I_n(000)| = sum_k E_{n,k}`, the Euler number `E_{n+1}`.
pub fn count_000(n: usize) -> BigUint {
    table_distinct_000(n).row_sum(n as i64)
}

/// `rs_{n,k}`: simsun permutations of `[n]` with `k` descents.
pub fn table_simsun(n_max: usize) -> CountTable {
    let nm = n_max as i64;
    let mut t = CountTable::new("simsun", vec![dim("n", 0, nm), dim("k", 0, nm)]);
    t.set(&[0, 0], BigUint::one());
    for n in 1..=nm {
        for k in 0..=n / 2 {
            let v = t.at(n - 1, k) * (k + 1) as u64 + t.at(n - 1, k - 1) * (n - 2 * k + 1) as u64;
            t.set(&[n, k], v);
        }
    }
    t
}

/// Entringer numbers `d_{n,k}`, `1 <= n <= n_max`, `0 <= k <= n`, from
/// `d_{n,k} = d_{n,k-1} + d_{n-1,n-k}` with `d_{1,1} = 1`, `d_{n,0} = 0`.
pub fn table_entringer(n_max: usize) -> CountTable {
    let nm = n_max as i64;
    let mut t = CountTable::new("entringer", vec![dim("n", 1, nm.max(1)), dim("k", 0, nm.max(1))]);
    if n_max == 0 {
        return t;
    }
    t.set(&[1, 1], BigUint::one());
    for n in 2..=nm {
        for k in 1..=n {
            let v = t.at(n, k - 1) + t.at(n - 1, n - k);
            t.set(&[n, k], v);
        }
    }
    t
}

/// `|I_n(001)| = 2^{n-1}`.
pub fn count_001(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    BigUint::one() << (n - 1)
}

/// Split of `I_n(001)` by the turning point `t`: `C(n-1, t-1)` for `t = 1..n`.
pub fn by_t_decomposition(n: usize) -> Vec<BigUint> {
    (1..=n as u64).map(|t| binomial(n as u64 - 1, t - 1)).collect()
}

/// Stirling numbers of the second kind `S_{n,k}` for `0 <= n, k <= n_max`.
pub fn table_stirling(n_max: usize) -> CountTable {
    let nm = n_max as i64;
    let mut t = CountTable::new("stirling", vec![dim("n", 0, nm), dim("k", 0, nm)]);
    t.set(&[0, 0], BigUint::one());
    for n in 1..=nm {
        for k in 1..=n {
            let v = t.at(n - 1, k) * k as u64 + t.at(n - 1, k - 1);
            t.set(&[n, k], v);
        }
    }
    t
}

/// `S_{n,k}`; zero when `k` is out of range.
pub fn stirling(n: usize, k: usize) -> BigUint {
    table_stirling(n).at(n as i64, k as i64)
}

/// Bell number `B_n = sum_k S_{n,k}`.
pub fn bell(n: usize) -> BigUint {
    table_stirling(n).row_sum(n as i64)
}

/// `u_{n,k} = u_{n-1,k-1} + k sum_{j=k}^{n-1} u_{n-1,j}`, `u_{0,0} = 1`.
pub fn table_callan(n_max: usize) -> CountTable {
    let nm = n_max as i64;
    let mut t = CountTable::new("callan", vec![dim("n", 0, nm), dim("k", 0, nm)]);
    t.set(&[0, 0], BigUint::one());
    for n in 1..=nm {
        for k in 1..=n {
            let tail: BigUint = (k..n).map(|j| t.at(n - 1, j)).sum();
            let v = t.at(n - 1, k - 1) + tail * k as u64;
            t.set(&[n, k], v);
        }
    }
    t
}

/// `|I_n(101)| = |I_n(110)| = sum_k u_{n,k}`.
pub fn count_101_110(n: usize) -> BigUint {
    table_callan(n).row_sum(n as i64)
}

/// `Y_{n,k}`: 021-avoiders of length `n` with `k` maximal entries,
/// from `Y_{n,k} = Y_{n-1,k-1} + c_k sum_{i=k}^{n-1} Y_{n-1,i}`, `Y_{1,1} = 1`.
///
/// `c_k = 2` for `k >= 2`, where the entry extending the `k`-th maximal
/// block `b_j` may be `j` or `0`. For `k = 1` that block is `b_0` and both
/// choices coincide, so `c_1 = 1`; with `c_1 = 2` the row sums overshoot.
pub fn table_maximal_021(n_max: usize) -> CountTable {
    let nm = n_max as i64;
    let mut t = CountTable::new("Y", vec![dim("n", 1, nm.max(1)), dim("k", 1, nm.max(1))]);
    if n_max == 0 {
        return t;
    }
    t.set(&[1, 1], BigUint::one());
    for n in 2..=nm {
        for k in 1..=n {
            let tail: BigUint = (k..n).map(|i| t.at(n - 1, i)).sum();
            let factor = if k == 1 { 1u32 } else { 2 };
            let v = t.at(n - 1, k - 1) + tail * factor;
            t.set(&[n, k], v);
        }
    }
    t
}

/// `|I_n(p)|` from a closed form or recurrence, for the ten length-3
/// patterns that have one. `None` for `120`, `010`, `100` and anything else.
pub fn formula_count(pattern: &str, n: usize) -> Option<BigUint> {
    let f: fn(usize) -> BigUint = match pattern {
        "012" => count_012,
        "021" => count_021,
        "102" => count_102,
        "201" | "210" => count_201_210,
        "000" => count_000,
        "001" => count_001,
        "011" => bell,
        "101" | "110" => count_101_110,
        _ => return None,
    };
    Some(if n == 0 { BigUint::one() } else { f(n) })
}

/// Names accepted by [`table_by_name`].
pub const TABLE_NAMES: [&str; 7] = ["T", "E000", "simsun", "entringer", "stirling", "callan", "Y"];

/// Builds a table by family name (case-insensitive).
pub fn table_by_name(name: &str, n_max: usize) -> Option<CountTable> {
    let t = match name.to_ascii_lowercase().as_str() {
        "t" | "top_bottom" => table_top_bottom(n_max),
        "e000" | "e" | "distinct_000" => table_distinct_000(n_max),
        "simsun" | "rs" => table_simsun(n_max),
        "entringer" | "d" => table_entringer(n_max),
        "stirling" | "s" => table_stirling(n_max),
        "callan" | "u" => table_callan(n_max),
        "y" | "maximal_021" => table_maximal_021(n_max),
        _ => return None,
    };
    Some(t)
}
