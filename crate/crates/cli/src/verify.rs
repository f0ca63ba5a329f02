//! Checks of the stated results on concrete groups.
//!
//! Each check computes a value and compares it with the value claimed for
//! it; the comparison is never adjusted to match.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use irrbase::affine::{build_affine_group, AffineParams};
use irrbase::chains::{
    achievable_lengths, chain_report, exhaustive_lengths, max_irredundant_length, min_base_length,
};
use irrbase::numtheory::big_omega;
use irrbase::perm::{induced_pair_action, is_primitive, Domain};
use irrbase::realize::{instantiate, witness_spec, IntervalRequest, ResourceGuard};
use irrbase::suzuki::{build_suzuki_group, SuzukiAction, SuzukiGroup, SuzukiParams};
use irrbase::Error;
use num_bigint::BigUint;
use serde::Serialize;

use crate::corpus;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Level {
    Quick,
    Full,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub id: String,
    pub title: String,
    pub passed: bool,
    pub detail: String,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl Check {
    pub fn line(&self) -> String {
        format!(
            "{} {}: {} ({}) [{:.2}s]",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.detail,
            self.elapsed.as_secs_f64()
        )
    }
}

type Outcome = Result<(bool, String), Error>;

fn run(id: &str, title: &str, budget: Option<Duration>, body: impl FnOnce() -> Outcome) -> Check {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    let (mut passed, mut detail) = match outcome {
        Ok(r) => r,
        Err(e) => (false, format!("error: {e}")),
    };
    if let Some(b) = budget {
        if elapsed > b {
            passed = false;
            detail.push_str(&format!("; over the {}s budget", b.as_secs()));
        }
    }
    Check {
        id: id.to_string(),
        title: title.to_string(),
        passed,
        detail,
        elapsed,
    }
}

fn guard() -> ResourceGuard {
    ResourceGuard::default()
}

fn sz8(extended: bool, action: SuzukiAction) -> Result<SuzukiGroup, Error> {
    build_suzuki_group(&SuzukiParams::new(1)?, extended, action, &guard())
}

fn fmt_set(v: &[usize]) -> String {
    let items: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

fn suzuki_pairs(extended: bool, expected: &[usize]) -> Outcome {
    let g = sz8(extended, SuzukiAction::Pairs)?;
    let r = achievable_lengths(&g.group);
    let (b, _) = min_base_length(&g.group);
    let (i, _) = max_irredundant_length(&g.group);
    let ok = r.lengths == expected
        && r.is_interval
        && b == expected[0]
        && i == *expected.last().expect("nonempty");
    Ok((
        ok,
        format!(
            "|G| = {}, b = {b}, I = {i}, lengths {} (expected {})",
            g.group.order(),
            fmt_set(&r.lengths),
            fmt_set(expected)
        ),
    ))
}

pub fn criterion_1() -> Check {
    run(
        "1",
        "Sz(8) on 2080 pairs: b = 2, I = 3, lengths {2,3}",
        Some(Duration::from_secs(60)),
        || suzuki_pairs(false, &[2, 3]),
    )
}

pub fn criterion_2() -> Check {
    run(
        "2",
        "Sz(8):3 on pairs: lengths {2,3,4}",
        Some(Duration::from_secs(120)),
        || suzuki_pairs(true, &[2, 3, 4]),
    )
}

pub fn criterion_3() -> Check {
    run("3", "Sz(8) explicit chain on pairs", None, || {
        let g = sz8(false, SuzukiAction::Pairs)?;
        let chain = g.witness_chain()?;
        let report = chain_report(&g.group, &chain)?;
        let strict = report.is_irredundant_base();
        let p = chain.points();
        // {1, w} as the second stabilizer
        let middle = g.group.pointwise_stabilizer(&p[..2]);
        let w = induced_pair_action(&g.ovoid.make_w()?, &g.domain)?;
        let elems: HashSet<_> = middle.elements().into_iter().collect();
        let expected: HashSet<_> = [irrbase::perm::Permutation::identity(&g.domain), w]
            .into_iter()
            .collect();
        let middle_ok = elems == expected;
        // Brute force: elements of Sz(8) on the ovoid fixing {(0,0,0), ∞} setwise.
        let delta = g.ovoid.domain();
        let all = corpus::closure(delta, &g.ovoid.generators(false)?);
        let origin = g.ovoid.index_of(&g.ovoid.finite(0, 0, 0)?)?;
        let brute = all
            .iter()
            .filter(|x| {
                let (a, b) = (x.act(0), x.act(origin));
                (a == 0 && b == origin) || (a == origin && b == 0)
            })
            .count();
        let first = &report.orders[1];
        let first_ok = *first == BigUint::from(brute) && brute == 14;
        let orders: Vec<String> = report.orders.iter().map(|o| o.to_string()).collect();
        Ok((
            strict && middle_ok && first_ok,
            format!(
                "orders [{}]; stabilizer of the first pair has order {first} \
                 (brute force {brute}; 2(q-1) = 14, 2(q+1) = 18); second stabilizer is {{1, w}}: {middle_ok}",
                orders.join(", ")
            ),
        ))
    })
}

pub fn criterion_4() -> Check {
    run(
        "4",
        "Sz(8):3 on the 65-point ovoid: b = 3",
        Some(Duration::from_secs(10)),
        || {
            let g = sz8(true, SuzukiAction::Delta)?;
            let (b, w) = min_base_length(&g.group);
            Ok((b == 3, format!("b = {b}, witness {:?}", w.labels())))
        },
    )
}

pub fn criterion_5() -> Check {
    run("5", "Sz(8) is 2-transitive on the ovoid", None, || {
        let g = sz8(false, SuzukiAction::Delta)?;
        let sizes = g.group.ordered_pair_orbit_sizes();
        Ok((
            sizes == [4160],
            format!("ordered-pair orbit sizes {sizes:?}"),
        ))
    })
}

/// Lengths of AGL_d(p^f) or AΓL_d(p^f) against the claimed `{d+1, ..., d+1+π(f)}`
/// (or `{d+1}` for AGL).
fn affine_claim(d: u32, p: u32, f: u32, extended: bool) -> Outcome {
    let params = AffineParams::new(d, p, f)?;
    let g = build_affine_group(&params, extended, &guard())?;
    let r = achievable_lengths(&g.group);
    let top = d as usize + 1 + if extended { big_omega(f as u64) } else { 0 };
    let claimed: Vec<usize> = (d as usize + 1..=top).collect();
    let name = if extended { "AΓL" } else { "AGL" };
    Ok((
        r.lengths == claimed,
        format!(
            "{name}_{d}({}): lengths {}, claimed {}",
            params.q(),
            fmt_set(&r.lengths),
            fmt_set(&claimed)
        ),
    ))
}

pub fn criterion_6() -> Check {
    run(
        "6",
        "affine lengths {d+1..d+1+π(f)}",
        Some(Duration::from_secs(600)),
        || {
            let mut ok = true;
            let mut parts = Vec::new();
            for (d, f, ext) in [(2, 2, false), (2, 2, true), (2, 6, true)] {
                let (pass, detail) = affine_claim(d, 2, f, ext)?;
                ok &= pass;
                parts.push(format!("{} {detail}", if pass { "ok" } else { "MISMATCH" }));
            }
            Ok((ok, parts.join("; ")))
        },
    )
}

pub const CRITERION_7_INTERVALS: [(usize, usize); 6] =
    [(2, 3), (2, 4), (3, 4), (3, 5), (4, 5), (5, 5)];

pub fn criterion_7() -> Check {
    run(
        "7",
        "realize, build and analyze each desk-scale interval",
        None,
        || {
            let mut ok = true;
            let mut parts = Vec::new();
            for (a, b) in CRITERION_7_INTERVALS {
                let spec = witness_spec(IntervalRequest::new(a, b)?, None)?;
                let inst = instantiate(&spec, &guard())?;
                let r = achievable_lengths(&inst.group);
                let want: Vec<usize> = (a..=b).collect();
                ok &= r.lengths == want;
                parts.push(format!("{} -> {}", fmt_set(&want), fmt_set(&r.lengths)));
            }
            // Intervals whose Suzuki witness needs a composite degree are only
            // checked at the spec level.
            for b in 5..=7 {
                let x = IntervalRequest::new(2, b)?;
                let spec = witness_spec(x, None)?;
                let refused = matches!(instantiate(&spec, &guard()), Err(Error::Guard { .. }));
                let consistent = spec.predicted_lengths()? == Some(x.lengths());
                ok &= refused && consistent;
                parts.push(format!(
                    "{} spec-only (guard refused: {refused})",
                    fmt_set(&x.lengths())
                ));
            }
            Ok((ok, parts.join(", ")))
        },
    )
}

pub fn criterion_8() -> Check {
    run(
        "8",
        "lengths form an interval on 120 random subgroups of Sym(n), n <= 8",
        None,
        || {
            let groups = corpus::random_groups(0xca3e_0008, 120, 8);
            let bad: Vec<String> = groups
                .iter()
                .map(achievable_lengths)
                .filter(|r| !r.is_interval)
                .map(|r| fmt_set(&r.lengths))
                .collect();
            Ok((
                bad.is_empty(),
                format!("{} groups, {} violations {bad:?}", groups.len(), bad.len()),
            ))
        },
    )
}

pub fn criterion_9() -> Check {
    run(
        "9",
        "orbit-representative search equals exhaustive search",
        None,
        || {
            let corpus = corpus::oracle_corpus();
            let mut bad = Vec::new();
            for (name, g) in &corpus {
                let pruned = achievable_lengths(g).lengths;
                let full = exhaustive_lengths(g).lengths;
                if pruned != full {
                    bad.push(format!(
                        "{name}: {} vs {}",
                        fmt_set(&pruned),
                        fmt_set(&full)
                    ));
                }
            }
            Ok((
                bad.is_empty(),
                format!(
                    "{} groups, {} discrepancies {bad:?}",
                    corpus.len(),
                    bad.len()
                ),
            ))
        },
    )
}

pub fn criterion_10() -> Check {
    run(
        "10",
        "stabilizer-chain orders equal brute-force enumeration",
        None,
        || {
            let mut ok = true;
            let mut parts = Vec::new();
            let sz = sz8(false, SuzukiAction::Delta)?;
            let mut named = vec![("Sz(8) on the ovoid".to_string(), sz.group)];
            for ext in [false, true] {
                let params = AffineParams::new(1, 2, 2)?;
                let g = build_affine_group(&params, ext, &guard())?;
                named.push((format!("{}_1(4)", if ext { "AΓL" } else { "AGL" }), g.group));
            }
            for (name, g) in &named {
                let brute = corpus::closure(g.domain(), g.generators()).len();
                ok &= *g.order() == BigUint::from(brute);
                parts.push(format!("{name}: {} = {brute}", g.order()));
            }
            let random = corpus::random_groups(0x0bde_0010, 20, 7);
            let agree = random
                .iter()
                .filter(|g| {
                    *g.order() == BigUint::from(corpus::closure(g.domain(), g.generators()).len())
                })
                .count();
            ok &= agree == random.len();
            parts.push(format!("random: {agree}/{} agree", random.len()));
            Ok((ok, parts.join("; ")))
        },
    )
}

/// The ten acceptance criteria, in order.
pub fn acceptance() -> Vec<Check> {
    vec![
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(),
        criterion_9(),
        criterion_10(),
    ]
}

fn primitivity() -> Check {
    run(
        "primitive",
        "Sz(8) and Sz(8):3 are primitive on 2080 pairs",
        None,
        || {
            let g0 = sz8(false, SuzukiAction::Pairs)?;
            let g = sz8(true, SuzukiAction::Pairs)?;
            let (a, b) = (is_primitive(&g0.group), is_primitive(&g.group));
            Ok((a && b, format!("Sz(8): {a}, Sz(8):3: {b}")))
        },
    )
}

fn frobenius_normalizes() -> Check {
    run(
        "semidirect",
        "Frobenius conjugates of Sz(8) generators lie in Sz(8)",
        None,
        || {
            let g = sz8(false, SuzukiAction::Delta)?;
            let fr = g.ovoid.make_field_aut_perm(1)?;
            let inv = fr.inverse();
            let all = g.ovoid.generators(false)?.iter().all(|x| {
                g.group.contains(
                    &inv.compose(x)
                        .and_then(|y| y.compose(&fr))
                        .expect("same domain"),
                )
            });
            Ok((all, format!("all conjugates are members: {all}")))
        },
    )
}

fn affine_item(d: u32, f: u32) -> Check {
    let title = format!("AGL_{d}(2^{f}) has lengths {{d+1}}, AΓL_{d}(2^{f}) has {{d+1..d+1+π(f)}}");
    run(&format!("affine-{d}-{}", 1u64 << f), &title, None, || {
        let (a, da) = affine_claim(d, 2, f, false)?;
        let (b, db) = affine_claim(d, 2, f, true)?;
        Ok((a && b, format!("{da}; {db}")))
    })
}

fn domain_sizes() -> Check {
    run(
        "sizes",
        "|Δ| = q^2 + 1 and |Ω| = C(q^2 + 1, 2) at q = 8",
        None,
        || {
            let g = sz8(false, SuzukiAction::Pairs)?;
            let delta = g.ovoid.domain().size();
            let omega = g.domain.size();
            let trans = g.group.is_transitive();
            let pairs = Domain::pairs(g.ovoid.domain()).size();
            Ok((
                delta == 65 && omega == 2080 && pairs == omega && trans,
                format!("|Δ| = {delta}, |Ω| = {omega}, transitive on Ω: {trans}"),
            ))
        },
    )
}

/// Checks run by `verify-paper`.
pub fn verify_paper(level: Level) -> Vec<Check> {
    let mut out = vec![
        domain_sizes(),
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        frobenius_normalizes(),
        affine_item(2, 2),
        affine_item(1, 2),
        affine_item(2, 3),
        criterion_7(),
        criterion_8(),
        criterion_10(),
    ];
    if level == Level::Full {
        out.push(affine_item(2, 6));
        out.push(primitivity());
        out.push(criterion_9());
    }
    out
}
