//! Top-level deciders and approximators: GHD/FHD checking under the
//! structural restrictions, the bounded-width approximation loop, the
//! fractional-to-integral cover conversion, and exact brute-force oracles
//! for small instances.

use crate::bags::{fhd_candidate_bags, ghd_candidate_bags, CandidateBagSet, FhdMode, GhdVariant};
use crate::covers::{fractional_cover, integral_cover, EdgeWeighting};
use crate::ctd::ctd_decide;
use crate::decomp::{DecompKind, Decomposition, WidthMode};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::metrics::{structural_metrics, vc_dimension};
use crate::set::VertexSet;
use crate::{format_rat, rat_int, Rat};
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::{BTreeMap, HashMap};
use std::time::Instant;

pub const DEFAULT_BUDGET: usize = 2_000_000;
pub const DEFAULT_ORACLE_CAP: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Answer {
    Yes,
    No,
    Fail,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertificateStrength {
    Absolute,
    RelativeToParameters,
}

#[derive(Debug)]
pub struct Diagnostics {
    pub bag_count: usize,
    pub params: BTreeMap<String, String>,
    pub millis: u128,
}

#[derive(Debug)]
pub struct SolveResult {
    pub answer: Answer,
    pub decomposition: Option<Decomposition>,
    /// Exact width of the returned decomposition, when there is one.
    pub width: Option<Rat>,
    pub certificate: CertificateStrength,
    pub diagnostics: Diagnostics,
}

impl SolveResult {
    fn no(certificate: CertificateStrength, diagnostics: Diagnostics) -> Self {
        SolveResult {
            answer: Answer::No,
            decomposition: None,
            width: None,
            certificate,
            diagnostics,
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct GhdOptions {
    pub variant: Option<GhdVariant>,
    pub c: Option<usize>,
    pub i: Option<usize>,
    pub budget: Option<usize>,
}

/// Decides ghw(H) <= k by candidate-bag generation plus the CompNF CTD
/// procedure; "yes" returns a GHD whose covers are reconstructed by exact
/// set cover per bag.
pub fn check_ghd(h: &Hypergraph, k: usize, options: &GhdOptions) -> Result<SolveResult> {
    let start = Instant::now();
    let budget = options.budget.unwrap_or(DEFAULT_BUDGET);
    let variant = options.variant.unwrap_or(GhdVariant::CoarseBip);
    let (c, i) = match variant {
        GhdVariant::CoarseBip | GhdVariant::FineBip => {
            let i = match options.i {
                Some(i) => i,
                None => structural_metrics(h, 2)?.iwidth,
            };
            (2, i)
        }
        GhdVariant::Bmip => {
            let c = options.c.unwrap_or(3);
            let i = match options.i {
                Some(i) => i,
                None => structural_metrics(h, c.max(2))?.miwidth[&c],
            };
            (c, i)
        }
    };
    let bags = ghd_candidate_bags(h, k, c, i, variant, budget)?;
    let diag = |bags: &CandidateBagSet, millis| Diagnostics {
        bag_count: bags.bags.len(),
        params: bags.provenance.params.clone(),
        millis,
    };
    match ctd_decide(h, &bags.bags)? {
        Some(td) => {
            let ghd = attach_integral_covers(h, &td)?;
            let width = ghd.cover_width();
            debug_assert!(width <= rat_int(k as i64));
            let d = diag(&bags, start.elapsed().as_millis());
            Ok(SolveResult {
                answer: Answer::Yes,
                decomposition: Some(ghd),
                width: Some(width),
                certificate: CertificateStrength::Absolute,
                diagnostics: d,
            })
        }
        None => Ok(SolveResult::no(
            CertificateStrength::Absolute,
            diag(&bags, start.elapsed().as_millis()),
        )),
    }
}

#[derive(Clone, Debug, Default)]
pub struct FhdOptions {
    pub mode: Option<FhdMode>,
    pub budget: Option<usize>,
}

/// Decides fhw(H) <= k for classes of bounded degree, intersection or
/// rank. Without an explicit mode, rank mode is preferred while ceil(r*k)
/// stays small, then bounded degree, then bounded intersection with the
/// fractional-part budget set to |V(H)| .
pub fn check_fhd(h: &Hypergraph, k: &Rat, options: &FhdOptions) -> Result<SolveResult> {
    let start = Instant::now();
    let budget = options.budget.unwrap_or(DEFAULT_BUDGET);
    let mode = match &options.mode {
        Some(m) => m.clone(),
        None => {
            let m = structural_metrics(h, 2)?;
            let rk = (rat_int(m.rank as i64) * k.clone()).ceil().to_integer();
            let kd = (rat_int(m.degree as i64) * k.clone()).ceil().to_integer();
            if rk <= 12.into() {
                FhdMode::Rank { r: m.rank }
            } else if kd <= 8.into() {
                FhdMode::Bdp { d: m.degree }
            } else {
                FhdMode::Bip {
                    i: m.iwidth,
                    c_frac: h.n_vertices(),
                }
            }
        }
    };
    let certificate = match &mode {
        FhdMode::Rank { .. } | FhdMode::Bdp { .. } => CertificateStrength::Absolute,
        FhdMode::Bip { .. } => CertificateStrength::RelativeToParameters,
        FhdMode::BmipApprox { .. } => {
            return Err(Error::Precondition(
                "bmip-approx belongs to the approximation entry point".into(),
            ))
        }
    };
    let set = fhd_candidate_bags(h, k, &mode, budget)?;
    solve_with_fhd_bags(h, &set, certificate, start)
}

fn solve_with_fhd_bags(
    h: &Hypergraph,
    set: &CandidateBagSet,
    certificate: CertificateStrength,
    start: Instant,
) -> Result<SolveResult> {
    let diagnostics = |millis| Diagnostics {
        bag_count: set.bags.len(),
        params: set.provenance.params.clone(),
        millis,
    };
    match ctd_decide(h, &set.bags)? {
        Some(td) => {
            let fhd = attach_fractional_covers(h, &td, set)?;
            let width = fhd.cover_width();
            Ok(SolveResult {
                answer: Answer::Yes,
                decomposition: Some(fhd),
                width: Some(width),
                certificate,
                diagnostics: diagnostics(start.elapsed().as_millis()),
            })
        }
        None => Ok(SolveResult::no(
            certificate,
            diagnostics(start.elapsed().as_millis()),
        )),
    }
}

/// Finds an FHD of width <= k(1+eps) whenever fhw(H) <= k, for hypergraphs
/// whose c-wise intersections have at most i vertices.
pub fn approx_fhd_bmip(
    h: &Hypergraph,
    k: &Rat,
    eps: &Rat,
    c: usize,
    i: usize,
    budget: usize,
) -> Result<SolveResult> {
    let start = Instant::now();
    let mode = FhdMode::BmipApprox {
        c,
        i,
        eps: eps.clone(),
    };
    let set = fhd_candidate_bags(h, k, &mode, budget)?;
    solve_with_fhd_bags(h, &set, CertificateStrength::Absolute, start)
}

#[derive(Debug)]
pub struct PtasOutcome {
    pub result: SolveResult,
    pub rounds: usize,
    /// ceil(log2(K'/eps')) + 1 with K' = K + eps - 1 and eps' = eps/3.
    pub round_bound: usize,
    /// The [L,U] interval after every bisection round; fhw(H) stays inside.
    pub trace: Vec<(Rat, Rat)>,
}

/// Bisection on the width using the (1+eps)-approximation as the probe:
/// keeps fhw(H) inside [L,U], halving the interval each round, and returns
/// an FHD of width < fhw(H) + eps, or "fail" when fhw(H) > K.
pub fn fhw_approx_ptas(
    h: &Hypergraph,
    k_bound: &Rat,
    eps: &Rat,
    c: usize,
    i: usize,
    budget: usize,
) -> Result<PtasOutcome> {
    if *k_bound < Rat::one() || !eps.is_positive() {
        return Err(Error::Precondition("need K >= 1 and eps > 0".into()));
    }
    let start = Instant::now();
    // findFHD(H, k, eps_abs): width <= k + eps_abs via the relative
    // approximation at eps_abs/k (clamped into its (0,1] domain).
    let find = |k: &Rat, eps_abs: &Rat| -> Result<Option<(Decomposition, Rat)>> {
        let rel = (eps_abs.clone() / k.clone()).min(Rat::one());
        let r = approx_fhd_bmip(h, k, &rel, c, i, budget)?;
        Ok(match r.answer {
            Answer::Yes => Some((r.decomposition.unwrap(), r.width.unwrap())),
            _ => None,
        })
    };
    let probe = find(k_bound, eps)?;
    let Some((mut best, mut best_width)) = probe else {
        return Ok(PtasOutcome {
            result: SolveResult {
                answer: Answer::Fail,
                decomposition: None,
                width: None,
                certificate: CertificateStrength::Absolute,
                diagnostics: Diagnostics {
                    bag_count: 0,
                    params: BTreeMap::new(),
                    millis: start.elapsed().as_millis(),
                },
            },
            rounds: 0,
            round_bound: ptas_round_bound(k_bound, eps),
            trace: Vec::new(),
        });
    };
    let mut low = Rat::one();
    let mut high = k_bound.clone() + eps.clone();
    let eps_third = eps.clone() / rat_int(3);
    let mut rounds = 0;
    let mut trace = vec![(low.clone(), high.clone())];
    loop {
        rounds += 1;
        let mid = low.clone() + (high.clone() - low.clone()) / rat_int(2);
        match find(&mid, &eps_third)? {
            Some((d, w)) => {
                high = mid + eps_third.clone();
                best = d;
                best_width = w;
            }
            None => {
                low = mid;
            }
        }
        trace.push((low.clone(), high.clone()));
        if high.clone() - low.clone() < *eps {
            break;
        }
    }
    Ok(PtasOutcome {
        result: SolveResult {
            answer: Answer::Yes,
            decomposition: Some(best),
            width: Some(best_width),
            certificate: CertificateStrength::Absolute,
            diagnostics: Diagnostics {
                bag_count: 0,
                params: BTreeMap::from([
                    ("K".into(), format_rat(k_bound)),
                    ("eps".into(), format_rat(eps)),
                ]),
                millis: start.elapsed().as_millis(),
            },
        },
        rounds,
        round_bound: ptas_round_bound(k_bound, eps),
        trace,
    })
}

/// Smallest t with 2^t >= (K + eps - 1)/(eps/3), plus one.
pub fn ptas_round_bound(k_bound: &Rat, eps: &Rat) -> usize {
    let k_prime = k_bound.clone() + eps.clone() - Rat::one();
    let eps_third = eps.clone() / rat_int(3);
    let ratio = k_prime / eps_third;
    let mut t = 0usize;
    let mut pow = Rat::one();
    while pow < ratio {
        pow *= rat_int(2);
        t += 1;
        if t > 128 {
            break;
        }
    }
    t + 1
}

#[derive(Debug)]
pub struct BagConversion {
    pub node: String,
    pub rho: usize,
    pub rho_star: Rat,
    /// ρ/ρ* as an exact rational.
    pub ratio: Rat,
}

#[derive(Debug)]
pub struct FhdToGhdReport {
    pub per_bag: Vec<BagConversion>,
    pub vc: Option<usize>,
    /// Informational ceiling max(1, 2^(vc+2) * log(11 ρ*)) on the per-bag
    /// ratio, evaluated in both log bases since the bound's base is
    /// ambiguous; printed, never asserted.
    pub ceiling_log2: Option<f64>,
    pub ceiling_ln: Option<f64>,
}

/// Converts an FHD into a GHD on the same tree and bags by replacing each
/// fractional cover with an optimal integral one.
pub fn fhd_to_ghd(h: &Hypergraph, f: &Decomposition) -> Result<(Decomposition, FhdToGhdReport)> {
    let own = f.cover_width();
    let report = f.validate(h, &own, WidthMode::Fractional)?;
    if !report.is_valid() {
        return Err(Error::InvalidDecomposition(format!(
            "fhd-to-ghd needs a valid FHD: {report}"
        )));
    }
    let mut ghd = f.clone();
    ghd.kind = DecompKind::Ghd;
    let mut per_bag = Vec::new();
    let mut max_rho_star = Rat::zero();
    for u in 0..ghd.nodes.len() {
        let bag = ghd.nodes[u].bag.clone();
        let (rho, lambda) = integral_cover(h, &bag)?;
        let (rho_star, _) = fractional_cover(h, &bag)?;
        let ratio = if rho_star.is_zero() {
            Rat::one()
        } else {
            rat_int(rho as i64) / rho_star.clone()
        };
        if rho_star > max_rho_star {
            max_rho_star = rho_star.clone();
        }
        per_bag.push(BagConversion {
            node: ghd.nodes[u].id.clone(),
            rho,
            rho_star,
            ratio,
        });
        ghd.nodes[u].cover = Some(lambda);
    }
    let vc = vc_dimension(h, 16).ok().map(|(d, _)| d);
    let (ceiling_log2, ceiling_ln) = match vc {
        Some(d) => {
            let rho_star = max_rho_star.to_f64().unwrap_or(1.0).max(1.0);
            let factor = 2f64.powi(d as i32 + 2);
            (
                Some((factor * (11.0 * rho_star).log2()).max(1.0)),
                Some((factor * (11.0 * rho_star).ln()).max(1.0)),
            )
        }
        None => (None, None),
    };
    Ok((
        ghd,
        FhdToGhdReport {
            per_bag,
            vc,
            ceiling_log2,
            ceiling_ln,
        },
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleKind {
    Ghw,
    Fhw,
}

/// Exact ghw/fhw by exhausting all vertex subsets as candidate bags;
/// correct because an optimal decomposition can be brought into component
/// normal form with bags drawn from that family, and its width is then one
/// of the finitely many subset cover values.
pub fn oracle_width(h: &Hypergraph, kind: OracleKind, cap: usize) -> Result<(Rat, Decomposition)> {
    let n = h.n_vertices();
    if n > cap {
        return Err(Error::CapExceeded {
            what: "width oracle".into(),
            quantity: "V(H)".into(),
            cap,
            actual: n,
        });
    }
    let all_masks: Vec<VertexSet> = (1usize..(1 << n))
        .map(|mask| VertexSet::from_indices(n, (0..n).filter(|b| mask >> b & 1 == 1)))
        .collect();
    match kind {
        OracleKind::Ghw => {
            let rho_by_mask = subset_cover_numbers(h);
            let mut rho: HashMap<VertexSet, usize> = HashMap::new();
            for (mask, s) in all_masks.iter().enumerate() {
                rho.insert(s.clone(), rho_by_mask[mask + 1]);
            }
            let top = rho[&h.all_vertices()];
            for k in 1..=top {
                let bags: Vec<VertexSet> =
                    all_masks.iter().filter(|s| rho[*s] <= k).cloned().collect();
                if let Some(td) = ctd_decide(h, &bags)? {
                    let ghd = attach_integral_covers(h, &td)?;
                    return Ok((ghd.cover_width(), ghd));
                }
            }
            unreachable!("the full vertex set always accepts at k = rho(V)")
        }
        OracleKind::Fhw => {
            let mut rho_star: HashMap<VertexSet, (Rat, EdgeWeighting)> = HashMap::new();
            for s in &all_masks {
                rho_star.insert(s.clone(), fractional_cover(h, s)?);
            }
            let mut thresholds: Vec<Rat> = rho_star.values().map(|(r, _)| r.clone()).collect();
            thresholds.sort();
            thresholds.dedup();
            let accepts = |t: &Rat| -> Result<Option<Decomposition>> {
                let bags: Vec<VertexSet> = all_masks
                    .iter()
                    .filter(|s| &rho_star[*s].0 <= t)
                    .cloned()
                    .collect();
                ctd_decide(h, &bags)
            };
            // binary search the least accepting threshold
            let mut lo = 0usize;
            let mut hi = thresholds.len() - 1;
            debug_assert!(accepts(&thresholds[hi])?.is_some());
            while lo < hi {
                let mid = (lo + hi) / 2;
                if accepts(&thresholds[mid])?.is_some() {
                    hi = mid;
                } else {
                    lo = mid + 1;
                }
            }
            let td = accepts(&thresholds[lo])?.expect("binary search landed on accepting");
            let mut fhd = td;
            fhd.kind = DecompKind::Fhd;
            for u in 0..fhd.nodes.len() {
                let (_, gamma) = rho_star[&fhd.nodes[u].bag].clone();
                fhd.nodes[u].cover = Some(gamma);
            }
            Ok((fhd.cover_width(), fhd))
        }
    }
}

/// rho(S) for every subset mask of V(H) by dynamic programming: cover the
/// lowest uncovered vertex by one of its edges. Exact set cover, used only
/// at oracle scale.
fn subset_cover_numbers(h: &Hypergraph) -> Vec<usize> {
    let n = h.n_vertices();
    let edge_masks: Vec<usize> = h
        .edge_sets()
        .iter()
        .map(|e| e.iter().fold(0usize, |m, v| m | 1 << v))
        .collect();
    let mut dp = vec![usize::MAX; 1 << n];
    dp[0] = 0;
    for mask in 1usize..(1 << n) {
        let low = mask.trailing_zeros() as usize;
        let mut best = usize::MAX;
        for em in &edge_masks {
            if em >> low & 1 == 1 {
                let rest = mask & !em;
                if dp[rest] != usize::MAX {
                    best = best.min(dp[rest] + 1);
                }
            }
        }
        dp[mask] = best;
    }
    dp
}

fn attach_integral_covers(h: &Hypergraph, td: &Decomposition) -> Result<Decomposition> {
    let mut ghd = td.clone();
    ghd.kind = DecompKind::Ghd;
    for u in 0..ghd.nodes.len() {
        let (_, lambda) = integral_cover(h, &ghd.nodes[u].bag)?;
        ghd.nodes[u].cover = Some(lambda);
    }
    Ok(ghd)
}

fn attach_fractional_covers(
    h: &Hypergraph,
    td: &Decomposition,
    set: &CandidateBagSet,
) -> Result<Decomposition> {
    let by_bag: HashMap<&VertexSet, usize> =
        set.bags.iter().enumerate().map(|(i, b)| (b, i)).collect();
    let mut fhd = td.clone();
    fhd.kind = DecompKind::Fhd;
    for u in 0..fhd.nodes.len() {
        let cover = match (&set.covers, by_bag.get(&fhd.nodes[u].bag)) {
            (Some(covers), Some(&i)) => covers[i].1.clone(),
            _ => fractional_cover(h, &fhd.nodes[u].bag)?.1,
        };
        fhd.nodes[u].cover = Some(cover);
    }
    Ok(fhd)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn h(edges: &[(&str, &[&str])]) -> Hypergraph {
        let spec: Vec<(&str, Vec<&str>)> = edges.iter().map(|(n, vs)| (*n, vs.to_vec())).collect();
        Hypergraph::from_edge_list(&spec).unwrap()
    }

    fn triangle() -> Hypergraph {
        h(&[
            ("e1", &["a", "b"]),
            ("e2", &["b", "c"]),
            ("e3", &["a", "c"]),
        ])
    }

    fn k4() -> Hypergraph {
        h(&[
            ("e1", &["a", "b"]),
            ("e2", &["a", "c"]),
            ("e3", &["a", "d"]),
            ("e4", &["b", "c"]),
            ("e5", &["b", "d"]),
            ("e6", &["c", "d"]),
        ])
    }

    #[test]
    fn oracle_triangle() {
        let g = triangle();
        let (ghw, gd) = oracle_width(&g, OracleKind::Ghw, 10).unwrap();
        assert_eq!(ghw, rat_int(2));
        assert!(gd
            .validate(&g, &rat_int(2), WidthMode::Integral)
            .unwrap()
            .is_valid());
        let (fhw, fd) = oracle_width(&g, OracleKind::Fhw, 10).unwrap();
        assert_eq!(fhw, rat(3, 2));
        assert!(fd
            .validate(&g, &rat(3, 2), WidthMode::Fractional)
            .unwrap()
            .is_valid());
    }

    #[test]
    fn oracle_acyclic_is_one() {
        let g = h(&[("e1", &["a", "b"]), ("e2", &["b", "c"])]);
        let (ghw, _) = oracle_width(&g, OracleKind::Ghw, 10).unwrap();
        let (fhw, _) = oracle_width(&g, OracleKind::Fhw, 10).unwrap();
        assert_eq!(ghw, rat_int(1));
        assert_eq!(fhw, rat_int(1));
    }

    #[test]
    fn oracle_k4_is_two() {
        let g = k4();
        let (ghw, _) = oracle_width(&g, OracleKind::Ghw, 10).unwrap();
        let (fhw, _) = oracle_width(&g, OracleKind::Fhw, 10).unwrap();
        assert_eq!(ghw, rat_int(2));
        assert_eq!(fhw, rat_int(2));
    }

    #[test]
    fn oracle_cap() {
        let g = k4();
        assert!(oracle_width(&g, OracleKind::Ghw, 3).is_err());
    }

    #[test]
    fn check_ghd_acyclic_yes_at_one() {
        let g = h(&[("e1", &["a", "b", "c"])]);
        let r = check_ghd(&g, 1, &GhdOptions::default()).unwrap();
        assert_eq!(r.answer, Answer::Yes);
        assert_eq!(r.width, Some(rat_int(1)));
    }

    #[test]
    fn check_ghd_triangle() {
        let g = triangle();
        let r1 = check_ghd(&g, 1, &GhdOptions::default()).unwrap();
        assert_eq!(r1.answer, Answer::No);
        let r2 = check_ghd(&g, 2, &GhdOptions::default()).unwrap();
        assert_eq!(r2.answer, Answer::Yes);
        let d = r2.decomposition.unwrap();
        assert!(d
            .validate(&g, &rat_int(2), WidthMode::Integral)
            .unwrap()
            .is_valid());
        let (ok, _) = d.check_compnf(&g).unwrap();
        assert!(ok);
    }

    #[test]
    fn check_fhd_triangle_rank_mode() {
        let g = triangle();
        let opts = FhdOptions {
            mode: Some(FhdMode::Rank { r: 2 }),
            budget: None,
        };
        let yes = check_fhd(&g, &rat(3, 2), &opts).unwrap();
        assert_eq!(yes.answer, Answer::Yes);
        assert_eq!(yes.width, Some(rat(3, 2)));
        assert_eq!(yes.certificate, CertificateStrength::Absolute);
        let no = check_fhd(&g, &rat(4, 3), &opts).unwrap();
        assert_eq!(no.answer, Answer::No);
    }

    #[test]
    fn check_fhd_k4() {
        let g = k4();
        let yes = check_fhd(&g, &rat_int(2), &FhdOptions::default()).unwrap();
        assert_eq!(yes.answer, Answer::Yes);
        let no = check_fhd(&g, &rat(19, 10), &FhdOptions::default()).unwrap();
        assert_eq!(no.answer, Answer::No);
    }

    #[test]
    fn approx_triangle() {
        let g = triangle();
        let r = approx_fhd_bmip(&g, &rat(3, 2), &rat(1, 3), 2, 1, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.answer, Answer::Yes);
        let w = r.width.unwrap();
        assert!(w <= rat(3, 2) * rat(4, 3));
    }

    #[test]
    fn approx_acyclic() {
        let g = h(&[("e1", &["a", "b"]), ("e2", &["b", "c"])]);
        let r = approx_fhd_bmip(&g, &rat_int(1), &rat(1, 2), 2, 1, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.answer, Answer::Yes);
        assert!(r.width.unwrap() <= rat(3, 2));
    }

    #[test]
    fn ptas_triangle() {
        let g = triangle();
        let out = fhw_approx_ptas(&g, &rat_int(2), &rat(1, 4), 2, 1, DEFAULT_BUDGET).unwrap();
        assert_eq!(out.result.answer, Answer::Yes);
        let w = out.result.width.unwrap();
        assert!(w >= rat(3, 2));
        assert!(w < rat(3, 2) + rat(1, 4));
        assert!(out.rounds <= out.round_bound);
    }

    #[test]
    fn ptas_acyclic() {
        let g = h(&[("e1", &["a", "b"]), ("e2", &["b", "c"])]);
        let out = fhw_approx_ptas(&g, &rat_int(2), &rat(1, 2), 2, 1, DEFAULT_BUDGET).unwrap();
        assert_eq!(out.result.answer, Answer::Yes);
        assert!(out.result.width.unwrap() <= rat(3, 2));
    }

    #[test]
    fn fhd_to_ghd_k4_unchanged() {
        let g = k4();
        let (_, fhd) = oracle_width(&g, OracleKind::Fhw, 10).unwrap();
        let (ghd, report) = fhd_to_ghd(&g, &fhd).unwrap();
        assert!(ghd
            .validate(&g, &rat_int(2), WidthMode::Integral)
            .unwrap()
            .is_valid());
        for b in &report.per_bag {
            assert!(b.ratio >= Rat::one());
        }
    }

    #[test]
    fn fhd_to_ghd_c5_ratio() {
        // 5-cycle with one bag holding everything: ρ* = 5/2, ρ = 3
        let g = h(&[
            ("e1", &["a", "b"]),
            ("e2", &["b", "c"]),
            ("e3", &["c", "d"]),
            ("e4", &["d", "e"]),
            ("e5", &["e", "a"]),
        ]);
        let (rho_star, gamma) = fractional_cover(&g, &g.all_vertices()).unwrap();
        assert_eq!(rho_star, rat(5, 2));
        let fhd = Decomposition::single(DecompKind::Fhd, "u0", g.all_vertices(), Some(gamma));
        let (ghd, report) = fhd_to_ghd(&g, &fhd).unwrap();
        assert_eq!(ghd.cover_width(), rat_int(3));
        assert_eq!(report.per_bag[0].ratio, rat(6, 5));
    }

    #[test]
    fn fhd_to_ghd_integral_input_unchanged() {
        let g = h(&[("e1", &["a", "b"])]);
        let mut cover = EdgeWeighting::new();
        cover.set(0, Rat::one());
        let fhd = Decomposition::single(DecompKind::Fhd, "u0", g.all_vertices(), Some(cover));
        let (ghd, _) = fhd_to_ghd(&g, &fhd).unwrap();
        assert_eq!(ghd.cover_width(), rat_int(1));
        assert_eq!(ghd.nodes[0].cover.as_ref().unwrap().get(0), Rat::one());
    }
}
