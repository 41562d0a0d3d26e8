//! Verification harness: Wilf equivalence, equidistribution, conjectures,
//! bijection suites and identity checks, each producing a [`VerdictReport`].

use std::collections::BTreeMap;
use std::time::Instant;

use invpat_core::bijections::{
    inv_to_tree000, kappa, kappa_inv, mu, mu_inv, phi, phi_inv, rho, rho_inv, tau, tau_inv, theta,
    theta_inv, tree000_to_inv,
};
use invpat_core::counting::{self, CountTable};
use invpat_core::enumerate::{for_each_avoider, Avoiders};
use invpat_core::stats::{stats, weak_left_to_right_maxima, Statistic};
use invpat_core::structures::{BwTree, Color, Permutation, Rgf, SchroderPath};
use invpat_core::{InversionSequence, Pattern};
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::{parallel, Error, Result};

/// Outcome for one value of `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NStatus {
    pub n: usize,
    pub pass: bool,
    /// Short human-readable note; the mismatch on failure.
    pub detail: String,
}

/// Result of one suite over a range of `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct VerdictReport {
    pub suite: String,
    pub n_min: usize,
    pub n_max: usize,
    pub per_n: Vec<NStatus>,
    /// First failing object, present whenever some `n` failed.
    pub counterexample: Option<Value>,
    pub elapsed_ms: f64,
}

impl VerdictReport {
    pub fn new(suite: impl Into<String>, n_min: usize, n_max: usize) -> Self {
        Self { suite: suite.into(), n_min, n_max, per_n: Vec::new(), counterexample: None, elapsed_ms: 0.0 }
    }

    /// Records a status; the first failure also stores its counterexample.
    pub fn record(&mut self, n: usize, pass: bool, detail: impl Into<String>, counterexample: impl FnOnce() -> Value) {
        if !pass && self.counterexample.is_none() {
            self.counterexample = Some(counterexample());
        }
        self.per_n.push(NStatus { n, pass, detail: detail.into() });
    }

    pub fn passed(&self) -> bool {
        self.per_n.iter().all(|s| s.pass)
    }

    fn timed(mut self, start: Instant) -> Self {
        self.elapsed_ms = start.elapsed().as_secs_f64() * 1000.0;
        self
    }

    /// JSON form; `elapsed_ms` is the only field that varies between runs.
    pub fn to_json(&self) -> Value {
        let per_n: Vec<Value> = self
            .per_n
            .iter()
            .map(|s| json!({ "n": s.n, "status": if s.pass { "pass" } else { "fail" }, "detail": s.detail }))
            .collect();
        json!({
            "suite": self.suite,
            "n_min": self.n_min,
            "n_max": self.n_max,
            "passed": self.passed(),
            "per_n": per_n,
            "counterexample": self.counterexample,
            "elapsed_ms": self.elapsed_ms,
        })
    }

    /// JSON form without timing, for reproducibility comparisons.
    pub fn to_json_untimed(&self) -> Value {
        let mut v = self.to_json();
        v.as_object_mut().expect("object").remove("elapsed_ms");
        v
    }
}

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

fn pats(list: &[&str]) -> Vec<Pattern> {
    list.iter().map(|s| s.parse().expect("static pattern")).collect()
}

type Bins = BTreeMap<i64, BigUint>;

fn bins_json(b: &Bins) -> Value {
    b.iter().map(|(k, v)| (k.to_string(), Value::String(v.to_string()))).collect::<serde_json::Map<_, _>>().into()
}

fn without_zeros(mut b: Bins) -> Bins {
    b.retain(|_, v| !v.is_zero());
    b
}

// ---------------------------------------------------------------------------
// Wilf equivalence

/// Compares brute-force avoidance sequences term by term for `n = 1..=n_max`.
pub fn check_wilf(p1: &Pattern, p2: &Pattern, n_max: usize) -> VerdictReport {
    let start = Instant::now();
    let mut r = VerdictReport::new(format!("wilf:{p1}~{p2}"), 1, n_max);
    for n in 1..=n_max {
        let a = parallel::count(n, std::slice::from_ref(p1));
        let b = parallel::count(n, std::slice::from_ref(p2));
        let pass = a == b;
        r.record(n, pass, format!("{a} vs {b}"), || {
            json!({ "n": n, p1.to_string(): a.to_string(), p2.to_string(): b.to_string() })
        });
    }
    r.timed(start)
}

// ---------------------------------------------------------------------------
// Equidistribution

/// One side of an equidistribution claim: a named histogram per `n`.
pub struct Side {
    pub label: String,
    hist: Box<dyn Fn(usize) -> Bins + Sync>,
}

impl Side {
    pub fn new(label: impl Into<String>, hist: impl Fn(usize) -> Bins + Sync + 'static) -> Self {
        Self { label: label.into(), hist: Box::new(hist) }
    }

    /// A statistic over `I_n(patterns)`.
    pub fn inversion(patterns: &[&str], statistic: Statistic) -> Self {
        let p = pats(patterns);
        let label = format!("I_n({}) {}", patterns.join(","), statistic);
        Self::new(label, move |n| parallel::distribution(n, &p, statistic).bins)
    }

    /// A statistic over Schröder paths of size `n + offset`.
    pub fn paths(label: &str, offset: isize, stat: fn(&SchroderPath) -> i64) -> Self {
        Self::new(format!("paths {label}"), move |n| {
            let mut b = Bins::new();
            let size = n as isize + offset;
            if size >= 0 {
                for p in SchroderPath::all(size as usize) {
                    *b.entry(stat(&p)).or_default() += 1u32;
                }
            }
            b
        })
    }

    /// Row `n` of a table, `k -> cell`.
    pub fn table_row(label: &str, build: fn(usize) -> CountTable) -> Self {
        Self::new(label.to_string(), move |n| {
            let t = build(n);
            t.entries().filter(|(i, _)| i[0] == n as i64).map(|(i, v)| (i[1], v.clone())).collect()
        })
    }

    /// Relabels every bin through `f(n, value)`.
    pub fn map_values(self, suffix: &str, f: fn(usize, i64) -> i64) -> Self {
        let Side { label, hist } = self;
        Self::new(format!("{label} {suffix}"), move |n| {
            let mut out = Bins::new();
            for (k, v) in hist(n) {
                *out.entry(f(n, k)).or_default() += v;
            }
            out
        })
    }

    pub fn histogram(&self, n: usize) -> Bins {
        without_zeros((self.hist)(n))
    }
}

/// Full histogram equality for every `n` in `n_min..=n_max`.
pub fn check_equidistribution(name: &str, a: &Side, b: &Side, n_min: usize, n_max: usize) -> VerdictReport {
    let start = Instant::now();
    let mut r = VerdictReport::new(format!("equidistribution:{name}"), n_min, n_max);
    for n in n_min..=n_max {
        let (ha, hb) = (a.histogram(n), b.histogram(n));
        let pass = ha == hb;
        r.record(n, pass, format!("{} vs {}", a.label, b.label), || {
            json!({ "n": n, "left": { "label": a.label, "bins": bins_json(&ha) }, "right": { "label": b.label, "bins": bins_json(&hb) } })
        });
    }
    r.timed(start)
}

/// The equidistribution claims that are checked without a bijection.
pub fn equidistribution_suite(n_max: usize) -> Vec<VerdictReport> {
    let n_max = n_max.max(1);
    let mut out = Vec::new();
    let zeros_021 = || Side::inversion(&["021"], Statistic::Zeros);
    out.push(check_equidistribution(
        "021-zeros~path-flats",
        &zeros_021(),
        &Side::paths("flats+1", -1, |p| p.stats().flats as i64 + 1),
        1,
        n_max,
    ));
    out.push(check_equidistribution(
        "021-zeros~path-peaks",
        &zeros_021(),
        &Side::paths("peaks+1", -1, |p| p.stats().peaks as i64 + 1),
        1,
        n_max,
    ));
    out.push(check_equidistribution(
        "021-ascent-symmetry",
        &Side::inversion(&["021"], Statistic::Ascents),
        &Side::inversion(&["021"], Statistic::Ascents).map_values("reflected", |n, k| n as i64 - 1 - k),
        1,
        n_max,
    ));
    out.push(check_equidistribution(
        "021-maximal~table-Y",
        &Side::inversion(&["021"], Statistic::MaximalEntries),
        &Side::table_row("Y", counting::table_maximal_021),
        1,
        n_max,
    ));
    out.push(check_equidistribution(
        "011-zeros~stirling",
        &Side::inversion(&["011"], Statistic::Zeros),
        &Side::table_row("stirling", counting::table_stirling),
        1,
        n_max,
    ));
    out.push(check_equidistribution(
        "011-zeros~partition-blocks",
        &Side::inversion(&["011"], Statistic::Zeros),
        &Side::new("set partitions by block count", |n| {
            let mut b = Bins::new();
            for v in Rgf::all(n) {
                *b.entry(v.to_partition().blocks().len() as i64).or_default() += 1u32;
            }
            b
        }),
        1,
        n_max,
    ));
    out.push(check_equidistribution(
        "000-distinct~table-E",
        &Side::inversion(&["000"], Statistic::DistinctValues),
        &Side::table_row("E000", counting::table_distinct_000),
        1,
        n_max,
    ));
    out.push(check_equidistribution(
        "E~simsun-duality",
        &Side::table_row("E000 reflected", counting::table_distinct_000).map_values("", |n, k| n as i64 - k),
        &Side::table_row("simsun", counting::table_simsun),
        1,
        n_max,
    ));
    out.push(check_equidistribution(
        "101-zeros~table-u",
        &Side::inversion(&["101"], Statistic::Zeros),
        &Side::table_row("callan", counting::table_callan),
        1,
        n_max,
    ));
    out.push(check_equidistribution(
        "110-zeros~table-u",
        &Side::inversion(&["110"], Statistic::Zeros),
        &Side::table_row("callan", counting::table_callan),
        1,
        n_max,
    ));
    out.push(check_equidistribution(
        "021-late-zeros~path-valleys",
        &Side::inversion(&["021"], Statistic::LateZeros),
        &Side::paths("valleys", -1, |p| p.stats().valleys as i64),
        1,
        n_max,
    ));
    out
}

// ---------------------------------------------------------------------------
// Conjectures

/// Conjecture identifiers accepted by [`run_conjecture`].
pub const CONJECTURES: [&str; 2] = ["entringer", "schroder_ascents"];

/// Runs a conjecture for `n = 1..=n_max`. A failing `n` is a finding, not
/// an error; only an unknown id is an error.
pub fn run_conjecture(id: &str, n_max: usize) -> Result<VerdictReport> {
    match id.replace('-', "_").as_str() {
        "entringer" => Ok(conjecture_entringer(n_max)),
        "schroder_ascents" | "schroeder_ascents" => Ok(conjecture_schroder_ascents(n_max)),
        other => Err(Error::Usage(format!("unknown conjecture {other:?}; expected one of {CONJECTURES:?}"))),
    }
}

/// `d_{n,k}` from down/up permutations of `[n+1]` with first entry `k+1`.
pub fn entringer_oracle(n: usize) -> Bins {
    let mut b = Bins::new();
    for p in Permutation::all_down_up(n + 1) {
        *b.entry(p.as_slice()[0] as i64 - 1).or_default() += 1u32;
    }
    b
}

fn conjecture_entringer(n_max: usize) -> VerdictReport {
    let start = Instant::now();
    let mut r = VerdictReport::new("conjecture:entringer", 1, n_max);
    let d = counting::table_entringer(n_max);
    let p = pats(&["000"]);
    for n in 1..=n_max {
        let row: Bins = without_zeros((0..=n as i64).map(|k| (k, d.at(n as i64, k))).collect());
        // the recurrence is only trusted where it matches the definition
        let oracle = if n <= 9 { Some(without_zeros(entringer_oracle(n))) } else { None };
        if let Some(o) = &oracle {
            if *o != row {
                r.record(n, false, "entringer table disagrees with down/up oracle", || {
                    json!({ "n": n, "table": bins_json(&row), "oracle": bins_json(o) })
                });
                continue;
            }
        }
        let mut last = Bins::new();
        for_each_avoider(n, &p, &[], |e| *last.entry(*e.last().expect("n >= 1") as i64 + 1).or_default() += 1u32);
        let pass = last == row;
        r.record(n, pass, "d_{n,k} vs #{e in I_n(000): e_n = k-1}", || {
            json!({ "n": n, "entringer": bins_json(&row), "last_entry_plus_one": bins_json(&last) })
        });
    }
    r.timed(start)
}

fn conjecture_schroder_ascents(n_max: usize) -> VerdictReport {
    let start = Instant::now();
    let mut r = VerdictReport::new("conjecture:schroder_ascents", 1, n_max);
    let p = pats(&["021"]);
    for n in 1..=n_max {
        let mut paths = Bins::new();
        for path in SchroderPath::all(n - 1) {
            *paths.entry(path.stats().ascents as i64 + 1).or_default() += 1u32;
        }
        let seqs = parallel::distribution(n, &p, Statistic::DistinctValues).bins;
        let pass = paths == seqs;
        r.record(n, pass, "paths with k-1 ascents vs I_n(021) with k distinct values", || {
            json!({ "n": n, "paths_ascents_plus_one": bins_json(&paths), "distinct_values": bins_json(&seqs) })
        });
    }
    r.timed(start)
}

// ---------------------------------------------------------------------------
// Bijections

/// Runs `check` on every object for each `n`; `check` returns `Err(reason)`
/// on the first problem, which becomes the counterexample.
fn per_object<T: std::fmt::Display>(
    suite: &str,
    n_min: usize,
    n_max: usize,
    objects: impl Fn(usize) -> Vec<T>,
    check: impl Fn(usize, &T) -> std::result::Result<(), String>,
    summary: impl Fn(usize, usize) -> Option<String>,
) -> VerdictReport {
    let start = Instant::now();
    let mut r = VerdictReport::new(suite, n_min, n_max);
    for n in n_min..=n_max {
        let objs = objects(n);
        let failure = objs.iter().find_map(|o| check(n, o).err().map(|why| (o.to_string(), why)));
        match failure {
            Some((obj, why)) => {
                r.record(n, false, why.clone(), || json!({ "n": n, "input": obj, "reason": why }));
            }
            None => match summary(n, objs.len()) {
                Some(why) => r.record(n, false, why.clone(), || json!({ "n": n, "reason": why })),
                None => r.record(n, true, format!("{} objects", objs.len()), || Value::Null),
            },
        }
    }
    r.timed(start)
}

fn avoiders(n: usize, p: &str) -> Vec<InversionSequence> {
    Avoiders::new(n, &pats(&[p])).collect()
}

fn ensure(cond: bool, why: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(why())
    }
}

/// Round trips and statistic transports of every bijection.
pub fn bijection_suite(n_max: usize) -> Vec<VerdictReport> {
    let n_max = n_max.max(1);
    let mut out = Vec::new();

    out.push(per_object(
        "bijection:rho",
        1,
        n_max,
        |n| avoiders(n, "021"),
        |n, e| {
            let p = rho(e).map_err(|x| x.to_string())?;
            ensure(p.size() == n - 1, || format!("size {} != {}", p.size(), n - 1))?;
            ensure(rho_inv(&p) == *e, || format!("round trip gave {}", rho_inv(&p)))?;
            let (s, ps) = (stats(e.as_slice()), p.stats());
            ensure(s.maximal_entries == ps.initial_up_run + 1, || {
                format!("maximal entries {} vs initial ups {}", s.maximal_entries, ps.initial_up_run)
            })
        },
        |n, len| {
            let r = counting::schroder(n - 1);
            (BigUint::from(len) != r).then(|| format!("{len} images but r_{} = {r}", n - 1))
        },
    ));

    out.push(per_object(
        "bijection:phi",
        1,
        n_max,
        |n| SchroderPath::all(n - 1),
        |n, p| {
            let e = phi(p);
            ensure(e.len() == n && InversionSequence::new(e.as_slice().to_vec()).is_ok(), || {
                format!("image {e} is not in I_{n}")
            })?;
            ensure(e.avoids(&pats(&["021"])[0]), || format!("image {e} contains 021"))?;
            let back = phi_inv(&e).map_err(|x| x.to_string())?;
            ensure(back == *p, || format!("round trip gave {back}"))?;
            let (s, ps) = (stats(e.as_slice()), p.stats());
            ensure(ps.valleys == s.late_zeros, || format!("valleys {} vs late zeros {}", ps.valleys, s.late_zeros))?;
            ensure(ps.valley_word_u_count == s.distinct_nonzero_values, || {
                format!("valley-word U {} vs distinct nonzero {}", ps.valley_word_u_count, s.distinct_nonzero_values)
            })?;
            ensure(ps.flats_at_height0 + 1 == s.leading_zeros, || {
                format!("height-0 flats {} vs leading zeros {}", ps.flats_at_height0, s.leading_zeros)
            })
        },
        |n, _| {
            let mut images: Vec<_> = SchroderPath::all(n - 1).iter().map(phi).collect();
            images.sort();
            images.dedup();
            (images != avoiders(n, "021")).then(|| "images are not exactly I_n(021)".to_string())
        },
    ));

    out.push(per_object(
        "bijection:kappa",
        1,
        n_max,
        |n| avoiders(n, "011"),
        |_, e| {
            let v = kappa(e).map_err(|x| x.to_string())?;
            ensure(Rgf::new(v.as_slice().to_vec()).is_ok(), || format!("{v} is not an RGF"))?;
            ensure(kappa_inv(&v) == *e, || format!("round trip gave {}", kappa_inv(&v)))?;
            let zeros = stats(e.as_slice()).zeros;
            ensure(v.to_partition().blocks().len() == zeros, || format!("{} blocks vs {zeros} zeros", v.num_blocks()))
        },
        |n, len| {
            let b = counting::bell(n);
            (BigUint::from(len) != b).then(|| format!("{len} sequences but Bell({n}) = {b}"))
        },
    ));

    out.push(per_object(
        "bijection:tau",
        1,
        n_max,
        |n| avoiders(n, "021"),
        |n, e| {
            let t = tau(e).map_err(|x| x.to_string())?;
            t.validate().map_err(|x| x.to_string())?;
            ensure(t.size() == n - 1, || format!("{} nodes", t.size()))?;
            ensure(tau_inv(&t) == *e, || format!("round trip gave {}", tau_inv(&t)))?;
            let s = stats(e.as_slice());
            ensure(s.ascents == t.black_count(), || format!("ascents {} vs black {}", s.ascents, t.black_count()))?;
            let branch = t.leftmost_branch_colors();
            let black = branch.iter().filter(|&&c| c == Color::Black).count();
            ensure(s.maximal_entries - 1 == black, || {
                format!("maximal entries {} vs leftmost black {black}", s.maximal_entries)
            })?;
            let l = s.leading_zeros - 1;
            ensure(branch.iter().take(l).all(|&c| c == Color::White), || {
                format!("top {l} leftmost nodes are not all white")
            })
        },
        |n, len| {
            let trees = BwTree::all(n - 1);
            if trees.len() != len {
                return Some(format!("{len} sequences but {} trees", trees.len()));
            }
            let mut images: Vec<String> = avoiders(n, "021").iter().map(|e| tau(e).expect("checked").to_string()).collect();
            let mut all: Vec<String> = trees.iter().map(ToString::to_string).collect();
            images.sort();
            all.sort();
            (images != all).then(|| "images are not all trees".to_string())
        },
    ));

    out.push(per_object(
        "bijection:mu",
        1,
        n_max,
        |n| avoiders(n, "210"),
        |_, e| {
            let f = mu(e).map_err(|x| x.to_string())?;
            ensure(f.avoids(&pats(&["201"])[0]), || format!("image {f} contains 201"))?;
            let m = weak_left_to_right_maxima(e.as_slice());
            ensure(m == weak_left_to_right_maxima(f.as_slice()), || "maxima positions moved".to_string())?;
            ensure(m.iter().all(|&j| e.get(j) == f.get(j)), || "maxima values changed".to_string())?;
            let back = mu_inv(&f).map_err(|x| x.to_string())?;
            ensure(back == *e, || format!("inverse gave {back}"))
        },
        |n, _| {
            let mut images: Vec<_> = avoiders(n, "210").iter().map(|e| mu(e).expect("checked")).collect();
            images.sort();
            images.dedup();
            (images != avoiders(n, "201")).then(|| "images are not exactly I_n(201)".to_string())
        },
    ));

    out.push(per_object(
        "bijection:theta",
        1,
        n_max,
        |n| avoiders(n, "001"),
        |_, e| {
            let pi = theta_inv(e);
            ensure(theta(&pi) == *e, || format!("round trip gave {}", theta(&pi)))?;
            let forbidden: [Permutation; 2] = ["132".parse().expect("valid"), "231".parse().expect("valid")];
            ensure(pi.avoids_classical(&forbidden), || format!("{pi} contains 132 or 231"))
        },
        |n, len| {
            let forbidden: [Permutation; 2] = ["132".parse().expect("valid"), "231".parse().expect("valid")];
            let target = Permutation::all(n).iter().filter(|p| p.avoids_classical(&forbidden)).count();
            (len != target).then(|| format!("{len} sequences but {target} permutations"))
        },
    ));

    out.push(per_object(
        "bijection:theta-all",
        1,
        n_max.min(8),
        Permutation::all,
        |_, pi| ensure(theta_inv(&theta(pi)) == *pi, || "round trip failed".to_string()),
        |_, _| None,
    ));

    out.push(per_object(
        "bijection:tree000",
        1,
        n_max,
        |n| avoiders(n, "000"),
        |_, e| {
            let t = inv_to_tree000(e).map_err(|x| x.to_string())?;
            ensure(tree000_to_inv(&t) == *e, || "round trip failed".to_string())
        },
        |n, len| {
            let expected = counting::count_000(n);
            (BigUint::from(len) != expected).then(|| format!("{len} trees but expected {expected}"))
        },
    ));
    out
}

// ---------------------------------------------------------------------------
// Formulas against brute force

/// Patterns with a formula, and the largest `n` the brute-force comparison
/// uses by default.
pub const FORMULA_PATTERNS: [&str; 10] = ["012", "021", "102", "201", "210", "000", "001", "011", "101", "110"];

/// Formula vs brute force for every pattern with a formula.
pub fn formula_suite(n_max: usize) -> Vec<VerdictReport> {
    FORMULA_PATTERNS
        .iter()
        .map(|&p| {
            let start = Instant::now();
            let limit = if p == "102" { n_max.min(9) } else { n_max };
            let mut r = VerdictReport::new(format!("formula:{p}"), 1, limit);
            let pattern = pats(&[p]);
            for n in 1..=limit {
                let f = counting::formula_count(p, n).expect("formula exists");
                let b = parallel::count(n, &pattern);
                r.record(n, f == b, format!("formula {f}, brute force {b}"), || {
                    json!({ "pattern": p, "n": n, "formula": f.to_string(), "brute": b.to_string() })
                });
            }
            r.timed(start)
        })
        .collect()
}

/// Brute-force avoidance sequences against the printed terms.
pub fn printed_sequences_suite(n_max: usize) -> Vec<VerdictReport> {
    let printed: [(&str, [u64; 9]); 3] = [
        ("120", [1, 2, 6, 23, 103, 515, 2803, 16334, 100700]),
        ("010", [1, 2, 5, 15, 53, 215, 979, 4922, 26992]),
        ("100", [1, 2, 6, 23, 106, 565, 3399, 22678, 165646]),
    ];
    printed
        .iter()
        .map(|(p, terms)| {
            let start = Instant::now();
            let limit = n_max.min(terms.len());
            let mut r = VerdictReport::new(format!("sequence:{p}"), 1, limit);
            let pattern = pats(&[p]);
            for n in 1..=limit {
                let b = parallel::count(n, &pattern);
                let want = big(terms[n - 1]);
                r.record(n, b == want, format!("{b} (expected {want})"), || {
                    json!({ "pattern": p, "n": n, "brute": b.to_string(), "expected": want.to_string() })
                });
            }
            r.timed(start)
        })
        .collect()
}

/// Seventh terms for all thirteen patterns.
pub const SEVENTH_TERMS: [(&str, u64); 13] = [
    ("012", 233),
    ("021", 1806),
    ("102", 1694),
    ("120", 2803),
    ("201", 4306),
    ("210", 4306),
    ("000", 1385),
    ("001", 64),
    ("010", 979),
    ("100", 3399),
    ("011", 877),
    ("101", 3207),
    ("110", 3207),
];

/// `|I_7(p)|` by brute force for every length-3 pattern.
pub fn seventh_terms_report() -> VerdictReport {
    let start = Instant::now();
    let mut r = VerdictReport::new("table:a7", 7, 7);
    let mut bad = Vec::new();
    for (p, want) in SEVENTH_TERMS {
        let got = parallel::count(7, &pats(&[p]));
        if got != big(want) {
            bad.push(json!({ "pattern": p, "brute": got.to_string(), "expected": want.to_string() }));
        }
    }
    let pass = bad.is_empty();
    r.record(7, pass, format!("{} of 13 patterns match", 13 - bad.len()), || Value::Array(bad));
    r.timed(start)
}

// ---------------------------------------------------------------------------
// Cross-family counts

fn perm_count(n: usize, pred: impl Fn(&Permutation) -> bool) -> usize {
    Permutation::all(n).iter().filter(|p| pred(p)).count()
}

/// Counts of trees, paths and permutation classes against the formulas.
pub fn cross_family_suite(n_max: usize) -> Vec<VerdictReport> {
    let n_max = n_max.min(8);
    let sep: Vec<Permutation> = ["2413", "3142"].iter().map(|s| s.parse().expect("valid")).collect();
    let boolean: Vec<Permutation> = ["321", "3412"].iter().map(|s| s.parse().expect("valid")).collect();
    let mut out = Vec::new();

    let start = Instant::now();
    let mut r = VerdictReport::new("cross:schroder", 0, n_max);
    for n in 0..=n_max {
        let rn = counting::schroder(n);
        let counts = [
            ("trees", BwTree::all(n).len()),
            ("paths", SchroderPath::all(n).len()),
            // separable permutations of [n+1] match r_n
            ("separable", perm_count(n + 1, |p| p.avoids_classical(&sep))),
        ];
        let pass = counts.iter().all(|(_, c)| BigUint::from(*c) == rn);
        r.record(n, pass, format!("r_{n} = {rn}"), || {
            json!({ "n": n, "r_n": rn.to_string(), "trees": counts[0].1, "paths": counts[1].1, "separable": counts[2].1 })
        });
    }
    out.push(r.timed(start));

    let start = Instant::now();
    let mut r = VerdictReport::new("cross:boolean", 1, n_max);
    for n in 1..=n_max {
        let c = perm_count(n, |p| p.avoids_classical(&boolean));
        let f = counting::count_012(n);
        r.record(n, BigUint::from(c) == f, format!("{c} vs {f}"), || {
            json!({ "n": n, "permutations": c, "count_012": f.to_string() })
        });
    }
    out.push(r.timed(start));

    let start = Instant::now();
    let mut r = VerdictReport::new("cross:simsun-descents", 1, n_max);
    let rs = counting::table_simsun(n_max);
    for n in 1..=n_max {
        let mut h = Bins::new();
        for p in Permutation::all(n).iter().filter(|p| p.is_simsun()) {
            *h.entry(p.descents() as i64).or_default() += 1u32;
        }
        let row = without_zeros((0..=n as i64).map(|k| (k, rs.at(n as i64, k))).collect());
        r.record(n, h == row, "simsun by descents vs rs_{n,k}", || {
            json!({ "n": n, "permutations": bins_json(&h), "table": bins_json(&row) })
        });
    }
    out.push(r.timed(start));

    let start = Instant::now();
    let mut r = VerdictReport::new("cross:1-23-4", 1, n_max);
    for n in 1..=n_max {
        let c = perm_count(n, Permutation::avoids_1_23_4);
        let f = counting::count_101_110(n);
        r.record(n, BigUint::from(c) == f, format!("{c} vs {f}"), || {
            json!({ "n": n, "permutations": c, "count_101_110": f.to_string() })
        });
    }
    out.push(r.timed(start));

    let start = Instant::now();
    let mut r = VerdictReport::new("cross:entringer-oracle", 1, n_max);
    let d = counting::table_entringer(n_max);
    for n in 1..=n_max {
        let row = without_zeros((0..=n as i64).map(|k| (k, d.at(n as i64, k))).collect());
        let o = without_zeros(entringer_oracle(n));
        r.record(n, row == o, "d_{n,k} vs down/up permutations", || {
            json!({ "n": n, "table": bins_json(&row), "oracle": bins_json(&o) })
        });
    }
    out.push(r.timed(start));

    out
}

// ---------------------------------------------------------------------------
// Identities

/// `u_{n,k+1} + k u_{n-1,k} = ((k+1)/k)(u_{n,k} - u_{n-1,k-1})` for
/// `1 <= k < n <= n_max`, in exact rationals.
pub fn callan_identity(n_max: usize) -> VerdictReport {
    let start = Instant::now();
    let mut r = VerdictReport::new("identity:callan", 2, n_max);
    let u = counting::table_callan(n_max);
    let q = |v: BigUint| BigRational::from_integer(v.into());
    for n in 2..=n_max as i64 {
        let mut bad = None;
        for k in 1..n {
            let lhs = q(u.at(n, k + 1)) + q(u.at(n - 1, k)) * q(big(k as u64));
            let factor = BigRational::new(BigUint::from((k + 1) as u64).into(), BigUint::from(k as u64).into());
            let rhs = factor * (q(u.at(n, k)) - q(u.at(n - 1, k - 1)));
            if lhs != rhs {
                bad = Some((k, lhs, rhs));
                break;
            }
        }
        let pass = bad.is_none();
        r.record(n as usize, pass, format!("k = 1..{}", n - 1), || {
            let (k, l, rr) = bad.expect("failure");
            json!({ "n": n, "k": k, "lhs": l.to_string(), "rhs": rr.to_string() })
        });
    }
    r.timed(start)
}

// ---------------------------------------------------------------------------
// Suites

/// Suite names accepted by [`run_suite`].
pub const SUITES: [&str; 10] = [
    "table",
    "wilf",
    "formulas",
    "sequences",
    "bijections",
    "equidistribution",
    "conjectures",
    "cross_family",
    "callan",
    "all",
];

/// Runs a named suite (or `all`).
pub fn run_suite(name: &str, n_max: usize) -> Result<Vec<VerdictReport>> {
    let name = name.replace('-', "_");
    let one = |s: &str| -> Vec<VerdictReport> {
        match s {
            "table" => vec![seventh_terms_report()],
            "wilf" => vec![
                check_wilf(&pats(&["201"])[0], &pats(&["210"])[0], n_max),
                check_wilf(&pats(&["101"])[0], &pats(&["110"])[0], n_max),
            ],
            "formulas" => formula_suite(n_max),
            "sequences" => printed_sequences_suite(n_max),
            "bijections" => bijection_suite(n_max),
            "equidistribution" => equidistribution_suite(n_max),
            "conjectures" => CONJECTURES.iter().map(|c| run_conjecture(c, n_max).expect("known id")).collect(),
            "cross_family" => cross_family_suite(n_max),
            "callan" => vec![callan_identity(n_max.max(2))],
            _ => unreachable!(),
        }
    };
    match name.as_str() {
        "all" => Ok(SUITES[..SUITES.len() - 1].iter().flat_map(|s| one(s)).collect()),
        s if SUITES.contains(&s) => Ok(one(s)),
        other => Err(Error::Usage(format!("unknown suite {other:?}; expected one of {SUITES:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wilf_examples() {
        let p = |s: &str| s.parse::<Pattern>().unwrap();
        assert!(check_wilf(&p("201"), &p("210"), 7).passed());
        assert!(check_wilf(&p("101"), &p("110"), 7).passed());
        let r = check_wilf(&p("012"), &p("021"), 4);
        assert!(!r.passed());
        assert!(!r.per_n[3].pass);
        assert_eq!(r.per_n[3].detail, "13 vs 22");
        // the first disagreement is already at n = 3
        let cx = r.counterexample.unwrap();
        assert_eq!(cx["n"], 3);
        assert_eq!(cx["012"], "5");
        assert_eq!(cx["021"], "6");
    }

    #[test]
    fn separable_count_is_shifted() {
        let sep: Vec<Permutation> = ["2413", "3142"].iter().map(|s| s.parse().unwrap()).collect();
        let counts: Vec<usize> = (1..=6).map(|n| perm_count(n, |p| p.avoids_classical(&sep))).collect();
        assert_eq!(counts, [1, 2, 6, 22, 90, 394]);
        assert_ne!(BigUint::from(counts[0]), counting::schroder(1));
        assert!(cross_family_suite(6)[0].passed());
    }

    #[test]
    fn trivial_conjecture_range() {
        for id in CONJECTURES {
            let r = run_conjecture(id, 1).unwrap();
            assert!(r.passed());
            assert_eq!(r.per_n.len(), 1);
        }
        assert!(run_conjecture("nope", 3).is_err());
    }

    #[test]
    fn failure_carries_counterexample() {
        let a = Side::inversion(&["021"], Statistic::Zeros);
        let b = Side::inversion(&["012"], Statistic::Zeros);
        let r = check_equidistribution("deliberately-false", &a, &b, 1, 4);
        assert!(!r.passed());
        assert!(r.counterexample.is_some());
        assert_eq!(r.to_json()["passed"], false);
    }

    #[test]
    fn reports_are_reproducible() {
        let a = run_suite("callan", 8).unwrap();
        let b = run_suite("callan", 8).unwrap();
        assert_eq!(a[0].to_json_untimed(), b[0].to_json_untimed());
        assert!(run_suite("bogus", 3).is_err());
    }
}
