//! Exhaustive property suites.
//!
//! Every suite enumerates its instances in a fixed order, checks them in
//! parallel, and reports failures in enumeration order, so a report depends
//! only on the suite and its range.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::maxmin::{
    is_quasi_distinguished, lambda_max_algorithm, lambda_max_even, lambda_max_via_pab, lambda_min, lambda_min_even,
    pp_sets, sign_twist, transp_sides,
};
use crate::multiplicity::{
    mult_bipartition, raising_expansion, springer_fiber_multiplicities, LocalSystemColumn, TPoly,
};
use crate::order::IndexOrder;
use crate::pab::{lambda_of, p_abs_set, PabParams};
use crate::partition::{bipartitions, Bipartition};
use crate::seq::{q, qr, EventualSeq};
use crate::symbols::{
    codomain_count, enumerate_odd_parts, enumerate_pport, order_from_h, phi, phi_inverse, symbol_of, GSCDatum,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Pab,
    Bijection,
    Order,
    Max,
    Min,
    Transp,
    Algorithm,
    Quasi,
    Pieri,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Bijection,
        Suite::Order,
        Suite::Pab,
        Suite::Max,
        Suite::Min,
        Suite::Algorithm,
        Suite::Transp,
        Suite::Quasi,
        Suite::Pieri,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Pab => "pab",
            Suite::Bijection => "bijection",
            Suite::Order => "order",
            Suite::Max => "max",
            Suite::Min => "min",
            Suite::Transp => "transp",
            Suite::Algorithm => "algorithm",
            Suite::Quasi => "quasi",
            Suite::Pieri => "pieri",
        }
    }

    /// Range of the size parameter actually swept for a requested `max_n`.
    /// The `pab` suite sweeps bipartition totals, every other suite sweeps `N`.
    pub fn range(self, max_n: u32) -> (u32, u32) {
        match self {
            Suite::Pab => (0, max_n.min(PAB_TOTAL_CAP)),
            _ => (1, max_n),
        }
    }

    fn run_on(self, lo: u32, hi: u32) -> Vec<CaseResult> {
        match self {
            Suite::Pab => pab_suite(lo, hi),
            Suite::Bijection => bijection_suite(lo, hi),
            Suite::Order => order_suite(lo, hi),
            Suite::Max => max_suite(lo, hi),
            Suite::Min => min_suite(lo, hi),
            Suite::Transp => transp_suite(lo, hi),
            Suite::Algorithm => algorithm_suite(lo, hi),
            Suite::Quasi => quasi_suite(lo, hi),
            Suite::Pieri => pieri_suite(lo, hi),
        }
    }
}

/// Largest bipartition total for the `pab` suite; the oracle is a signed sum
/// over `S_{m0} × S_{m1}` and grows factorially past it.
pub const PAB_TOTAL_CAP: u32 = 7;

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| Error::Size(format!("unknown suite {s:?}")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub input: String,
    pub expected: String,
    pub got: String,
    /// `true` when a library call failed rather than a property.
    pub internal: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub n_min: u32,
    pub n_max: u32,
    /// Instances enumerated.
    pub cases: u64,
    /// Individual property checks across all instances.
    pub checks: u64,
    pub failures: Vec<Failure>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn has_internal(&self) -> bool {
        self.failures.iter().any(|f| f.internal)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "suite {}: N in {}..={}, {} cases, {} checks, {} failures",
            self.suite,
            self.n_min,
            self.n_max,
            self.cases,
            self.checks,
            self.failures.len()
        )?;
        for x in &self.failures {
            writeln!(f, "  FAIL {}: expected {}, got {}", x.input, x.expected, x.got)?;
        }
        Ok(())
    }
}

/// Outcome of one instance: its label, how many checks it covered, and failures.
struct CaseResult {
    checks: u64,
    failures: Vec<Failure>,
}

/// Accumulates the checks of one instance.
struct Case {
    input: String,
    checks: u64,
    failures: Vec<Failure>,
}

impl Case {
    fn new(input: impl Into<String>) -> Self {
        Case { input: input.into(), checks: 0, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, expected: impl FnOnce() -> String, got: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(Failure {
                input: self.input.clone(),
                expected: expected(),
                got: got(),
                internal: false,
            });
        }
    }

    fn finish(self) -> CaseResult {
        CaseResult { checks: self.checks, failures: self.failures }
    }
}

/// Runs `body` on each item in parallel, keeping item order.
fn fan_out<T: Sync>(
    items: &[T],
    label: impl Fn(&T) -> String + Sync,
    body: impl Fn(&T, &mut Case) -> Result<()> + Sync,
) -> Vec<CaseResult> {
    items
        .par_iter()
        .map(|x| {
            let mut c = Case::new(label(x));
            if let Err(e) = body(x, &mut c) {
                c.checks += 1;
                c.failures.push(Failure {
                    input: c.input.clone(),
                    expected: "no error".into(),
                    got: e.to_string(),
                    internal: true,
                });
            }
            c.finish()
        })
        .collect()
}

/// Runs one suite on `jobs` worker threads (`0` picks the rayon default).
pub fn run_suite(suite: Suite, max_n: u32, jobs: usize) -> Result<VerificationReport> {
    if max_n < 1 {
        return Err(Error::Size("max-N must be at least 1".into()));
    }
    let (lo, hi) = suite.range(max_n);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::CrossCheck(format!("thread pool: {e}")))?;
    let results = pool.install(|| suite.run_on(lo, hi));
    let mut report = VerificationReport {
        suite: suite.name().into(),
        n_min: lo,
        n_max: hi,
        cases: 0,
        checks: 0,
        failures: Vec::new(),
        elapsed_ms: None,
    };
    for r in results {
        report.cases += 1;
        report.checks += r.checks;
        report.failures.extend(r.failures);
    }
    Ok(report)
}

fn odd_data(lo: u32, hi: u32) -> Vec<GSCDatum> {
    (lo..=hi).flat_map(enumerate_odd_parts).collect()
}

/// Criterion-style bijection check: counts match and `Φ^{-1} ∘ Φ` fixes classes.
fn bijection_suite(lo: u32, hi: u32) -> Vec<CaseResult> {
    let ns: Vec<u32> = (lo..=hi).collect();
    fan_out(
        &ns,
        |n| format!("N={n}"),
        |&n, c| {
            let data = enumerate_pport(n);
            c.check(data.len() == codomain_count(n), || codomain_count(n).to_string(), || data.len().to_string());
            let mut images = BTreeSet::new();
            for d in &data {
                let (ab, k) = phi(d)?;
                let back = phi_inverse(&ab, k, n)?;
                c.check(back.same_class(d), || d.to_string(), || back.to_string());
                images.insert((if k == 0 { ab.unordered_key() } else { ab }, k));
            }
            c.check(
                images.len() == data.len(),
                || format!("{} distinct images", data.len()),
                || images.len().to_string(),
            );
            Ok(())
        },
    )
}

/// `λ ≤ λ′ ⇔ p_{λ,ε} ≤ p_{λ′,ε′}` over all pairs of each `N`.
fn order_suite(lo: u32, hi: u32) -> Vec<CaseResult> {
    let mut rows: Vec<(u32, usize)> = Vec::new();
    let mut syms: Vec<Vec<(GSCDatum, EventualSeq)>> = vec![Vec::new(); hi as usize + 1];
    for n in lo..=hi {
        syms[n as usize] = enumerate_pport(n)
            .into_iter()
            .map(|d| symbol_of(&d).map(|s| (d, s.union_seq())))
            .collect::<Result<_>>()
            .unwrap_or_default();
        rows.extend((0..syms[n as usize].len()).map(|i| (n, i)));
    }
    fan_out(
        &rows,
        |&(n, i)| format!("N={n} {}", syms[n as usize][i].0),
        |&(n, i), c| {
            let all = &syms[n as usize];
            let (d, p) = &all[i];
            for (d2, p2) in all {
                let want = d.lam().dominated_by(d2.lam());
                let got = p.dominated_by(p2)?;
                c.check(want == got, || format!("{d} ≤ {d2} is {want}"), || format!("symbol dominance {got}"));
            }
            Ok(())
        },
    )
}

/// The parameter grid for membership and extremal checks.
fn pab_grid() -> Vec<PabParams> {
    let mut out = Vec::new();
    for k in 0..=3 {
        out.push(PabParams::new(q(k), q(-k), q(2)).unwrap());
        out.push(PabParams::new(qr(k, 2), qr(-k, 2), qr(1, 2)).unwrap());
    }
    out.push(PabParams::new(q(1), q(0), q(1)).unwrap());
    out.push(PabParams::new(q(0), q(1), q(1)).unwrap());
    out
}

/// Oracle equivalence, the diagonal, membership and extremal detection.
fn pab_suite(lo: u32, hi: u32) -> Vec<CaseResult> {
    let instances: Vec<(Bipartition, IndexOrder)> = (lo..=hi)
        .flat_map(|n| bipartitions(n).into_iter())
        .flat_map(|ab| IndexOrder::inequivalent_orders(&ab, 1).into_iter().map(move |o| (ab.clone(), o)))
        .collect();
    let grid = pab_grid();
    fan_out(
        &instances,
        |(ab, o)| format!("({ab}) {o}"),
        |(ab, o), c| {
            let col = raising_expansion(ab, o)?;
            let targets = bipartitions(ab.size());
            let mut oracle = Vec::with_capacity(targets.len());
            for t in &targets {
                let slow = mult_bipartition(ab, o, t)?;
                let fast = col.get(t).map_or(0, TPoly::at_one);
                c.check(slow == fast, || format!("mult to ({t}) = {slow}"), || format!("expansion gives {fast}"));
                oracle.push(slow);
            }
            let diag = mult_bipartition(ab, o, ab)?;
            c.check(diag == 1, || "diagonal 1".into(), || diag.to_string());
            for prm in &grid {
                let set = p_abs_set(ab, o, *prm)?;
                for m in &set {
                    let v = oracle[targets.iter().position(|t| t == m).unwrap()];
                    c.check(v == 1, || format!("member ({m}) has mult 1"), || v.to_string());
                }
                let ext = lambda_of(set.iter().next().unwrap(), *prm);
                for (t, &v) in targets.iter().zip(&oracle) {
                    if lambda_of(t, *prm).same_as(&ext)? {
                        let member = set.contains(t);
                        c.check(
                            (v != 0) == member,
                            || format!("({t}) nonzero iff member ({member})"),
                            || v.to_string(),
                        );
                    }
                }
            }
            Ok(())
        },
    )
}

/// Multiplicity 1 at the maximum, strict dominance elsewhere, and the
/// strict largest term of the maximum's symbol.
fn max_suite(lo: u32, hi: u32) -> Vec<CaseResult> {
    let data = odd_data(lo, hi);
    fan_out(
        &data,
        |d| d.to_string(),
        |d, c| {
            let mx = lambda_max_via_pab(d)?;
            let col = LocalSystemColumn::new(d)?;
            let m = col.mult(&mx)?;
            c.check(m == 1, || format!("mult to λ^max {mx} = 1"), || m.to_string());
            c.check(
                mx.lam().all_odd() && !mx.is_degenerate(),
                || "λ^max non-degenerate with odd parts".into(),
                || mx.to_string(),
            );
            for d2 in enumerate_pport(d.n()) {
                if d2.defect() != d.defect() || col.mult(&d2)? == 0 {
                    continue;
                }
                let below = d2.lam().dominated_by(mx.lam()) && d2.lam() != mx.lam();
                c.check(below || d2.same_class(&mx), || format!("{d2} below λ^max {mx}"), || "not below".into());
            }
            let (mab, k) = phi(&mx)?;
            let terms = EventualSeq::lambda_abs(&mab.first, &mab.second, q(k), q(-k), q(2)).terms(2);
            c.check(terms[0] > terms[1], || "strict largest symbol term".into(), || format!("{:?}", terms));
            Ok(())
        },
    )
}

/// `ˢλ^min = λ^max` and minimality.
fn min_suite(lo: u32, hi: u32) -> Vec<CaseResult> {
    let data = odd_data(lo, hi);
    fan_out(
        &data,
        |d| d.to_string(),
        |d, c| {
            let mx = lambda_max_via_pab(d)?;
            let mn = lambda_min(d)?;
            let back = sign_twist(&mn)?;
            c.check(back.same_class(&mx), || mx.to_string(), || back.to_string());
            let col = LocalSystemColumn::new(d)?;
            for d2 in enumerate_pport(d.n()) {
                if d2.defect() != d.defect() || col.mult(&sign_twist(&d2)?)? == 0 {
                    continue;
                }
                let above = mn.lam().dominated_by(d2.lam()) && d2.lam() != mn.lam();
                c.check(above || d2.same_class(&mn), || format!("λ^min {mn} below {d2}"), || "not below".into());
            }
            Ok(())
        },
    )
}

/// Recursive construction against the peeling route, and `M` preservation.
fn algorithm_suite(lo: u32, hi: u32) -> Vec<CaseResult> {
    let mut data = odd_data(lo, hi);
    data.push(GSCDatum::parse("19,17,15,13,11,9,7", "-++-+-+").expect("fixed example"));
    fan_out(
        &data,
        |d| d.to_string(),
        |d, c| {
            let (bar, _) = lambda_max_algorithm(d)?;
            if d.n() > hi {
                let want = "25,23,15,13,11,3,1 / -++-+-+";
                let got = format!("{} / {}", bar.lam(), bar.eps_positional());
                c.check(got == want, || want.into(), || got.clone());
            } else {
                let mx = lambda_max_via_pab(d)?;
                c.check(bar.same_class(&mx), || mx.to_string(), || bar.to_string());
            }
            c.check(bar.m_value() == d.m_value(), || format!("M = {}", d.m_value()), || bar.m_value().to_string());
            Ok(())
        },
    )
}

/// The peeling sets at `s = 2` and `s = 1/2` agree, and the transpose identity.
fn transp_suite(lo: u32, hi: u32) -> Vec<CaseResult> {
    let data = odd_data(lo, hi);
    fan_out(
        &data,
        |d| d.to_string(),
        |d, c| {
            let (half, full) = pp_sets(d)?;
            c.check(half == full, || format!("{full:?}"), || format!("{half:?}"));
            let (l, r) = transp_sides(d)?;
            c.check(l.same_as(&r)?, || r.render(), || l.render());
            Ok(())
        },
    )
}

fn quasi_suite(lo: u32, hi: u32) -> Vec<CaseResult> {
    let data = odd_data(lo, hi);
    fan_out(
        &data,
        |d| d.to_string(),
        |d, c| {
            let (bar, _) = lambda_max_algorithm(d)?;
            c.check(is_quasi_distinguished(bar.lam()), || "quasi-distinguished λ^max".into(), || bar.to_string());
            Ok(())
        },
    )
}

/// The even-parts maximum is the unique dominance-maximal multiplicity-1
/// member of the fibre support; odd-parts fibres agree with the column.
fn pieri_suite(lo: u32, hi: u32) -> Vec<CaseResult> {
    let data: Vec<GSCDatum> =
        (lo..=hi).flat_map(enumerate_pport).filter(|d| d.defect() <= 1 && !d.lam().odd_part().is_empty()).collect();
    fan_out(
        &data,
        |d| d.to_string(),
        |d, c| {
            let table = springer_fiber_multiplicities(d)?;
            let mx = lambda_max_even(d)?;
            let at = table.get(&mx.normalized()).copied().unwrap_or(0);
            c.check(at == 1, || format!("multiplicity 1 at {mx}"), || at.to_string());
            for (d2, &m) in &table {
                let below = d2.lam().dominated_by(mx.lam()) && d2.lam() != mx.lam();
                c.check(below || d2.same_class(&mx), || format!("{d2} (mult {m}) below {mx}"), || "not below".into());
            }
            let mn = lambda_min_even(d)?;
            let twist = sign_twist(&mx)?;
            c.check(mn.same_class(&twist), || twist.to_string(), || mn.to_string());
            if d.lam().all_odd() {
                let col = LocalSystemColumn::new(d)?;
                for d2 in enumerate_pport(d.n()) {
                    let want = col.mult(&d2)?;
                    let got = table.get(&d2.normalized()).copied().unwrap_or(0);
                    c.check(want == got, || format!("{d2}: {want}"), || got.to_string());
                }
            } else {
                let odd = lambda_max_via_pab(&GSCDatum::new(d.lam().odd_part(), d.signs().to_vec())?)?;
                c.check(
                    mx.lam().part(1) == odd.lam().part(1) + d.lam().even_part().size(),
                    || "first part grows by the even total".into(),
                    || mx.to_string(),
                );
            }
            Ok(())
        },
    )
}

/// Is `(α, β)` outside `H` at its defect, with the source rejected.
pub fn negative_control(d: &GSCDatum) -> Result<(bool, bool)> {
    let (ab, k) = phi(d)?;
    let outside = order_from_h(&ab, k).is_err();
    let rejected = LocalSystemColumn::new(d).is_err();
    Ok((outside, rejected))
}
