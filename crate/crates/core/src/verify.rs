//! Registry of checkable claims. Each claim runs at a given degree `n` and
//! produces `(claim, n, check, expected, got)` rows.

use std::collections::BTreeSet;
use std::fmt::Display;

use num_bigint::BigUint;
use serde::Serialize;

use crate::arc_graph::{
    b_orbits, build_arc_graph, check_iso_with_dominance, coxeter_violations, dominance_distance,
    dominance_poset, schreier_graph_check,
};
use crate::bijections::{phi, phi_inverse, psi_shape_inverse, psi_shape_map};
use crate::characters::{count_arc_mu, count_arc_mu_brute, partitions, regev_report};
use crate::descent_stats::{
    arc_descent_closed_form, arc_maj_closed_form, descent_distribution_of_family, hook_descent_closed_form,
    hook_distribution, maj_polynomial, non_unimodal_descent_closed_form, t_descent_closed_form,
    tz_equidistribution, unimodal_descent_closed_form, z_maj_closed_form, DescentDistribution,
};
use crate::error::{Error, Result};
use crate::families::{
    arc_patterns, generate_family, left_unimodal_patterns, unimodal_patterns, DescentWord, Family, PsiCode,
};
use crate::perm::{patterns, symmetric_group, Permutation};
use crate::shuffles::{rectangle_filling_check, shuffle_union, shuffle_weak_order_check};
use crate::tableaux::{count_shifted_staircase, generate_t_n, is_in_t_n};
use crate::weak_order::{build_weak_hasse, count_all_maximal_chains, Ground};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub claim: String,
    pub n: usize,
    pub check: String,
    pub expected: String,
    pub got: String,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub claim: String,
    pub checks: Vec<Check>,
    pub passed: bool,
}

type Runner = fn(usize) -> Result<Vec<Check>>;

/// A registered claim with the degrees it supports.
pub struct Claim {
    pub id: &'static str,
    pub summary: &'static str,
    pub min_n: usize,
    pub max_n: usize,
    run: Runner,
}

const REGISTRY: &[Claim] = &[
    Claim { id: "family-counts", summary: "|L_n|, |U_n|, |A_n|, |Z_n| against their formulas", min_n: 1, max_n: 12, run: family_counts },
    Claim { id: "patterns", summary: "pattern-avoidance classes equal the generated families", min_n: 1, max_n: 8, run: pattern_classes },
    Claim { id: "maximal-chains", summary: "maximal chains of Weak(U_n) against the product formula", min_n: 2, max_n: 7, run: maximal_chains },
    Claim { id: "arc-graph", summary: "diameter, antipodes, geodesic vertices and geodesic count of X_n", min_n: 2, max_n: 8, run: arc_graph_geodesics },
    Claim { id: "encodings", summary: "psi and nu codes round-trip on A_n", min_n: 1, max_n: 9, run: encodings },
    Claim { id: "dominance", summary: "dominance distance formula and X_n as Hasse diagram plus wrap edges", min_n: 3, max_n: 7, run: dominance },
    Claim { id: "descent-closed-forms", summary: "descent and major index generating functions against brute force", min_n: 2, max_n: 9, run: descent_closed_forms },
    Claim { id: "tz-equidistribution", summary: "Des is equidistributed on T_n and Z_n", min_n: 4, max_n: 9, run: tz },
    Claim { id: "bijections", summary: "both maps Z_n -> T_n are bijections with the stated properties", min_n: 4, max_n: 8, run: bijections },
    Claim { id: "mu-enumeration", summary: "|A_n ∩ L_mu^-1| closed form against enumeration", min_n: 2, max_n: 9, run: mu_enumeration },
    Claim { id: "regev", summary: "Regev closed form, MN decomposition and signed sum agree", min_n: 2, max_n: 9, run: regev },
    Claim { id: "coxeter", summary: "affine Coxeter relations hold pointwise on A_n", min_n: 2, max_n: 8, run: coxeter },
    Claim { id: "schreier", summary: "Schreier graph equals X_n; B orbits are first-letter fibers", min_n: 3, max_n: 8, run: schreier },
    Claim { id: "shuffles", summary: "shuffle union size and pattern class", min_n: 2, max_n: 8, run: shuffles },
    Claim { id: "rectangle-fillings", summary: "rectangle fillings give exactly the shuffles, k·m <= 16", min_n: 2, max_n: 8, run: rectangle_fillings },
    Claim { id: "shuffle-weak-order", summary: "maxima, intervals and chain counts of Weak(barSh_n)", min_n: 2, max_n: 7, run: shuffle_weak_order },
];

pub fn registry() -> &'static [Claim] {
    REGISTRY
}

pub fn find_claim(id: &str) -> Result<&'static Claim> {
    REGISTRY
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownClaim(id.to_string()))
}

impl Claim {
    pub fn run(&self, n: usize) -> Result<Vec<Check>> {
        if n < self.min_n || n > self.max_n {
            return Err(Error::DegreeOutOfRange(n));
        }
        (self.run)(n)
    }

    /// Like [`Claim::run`] but without the upper size limit.
    pub fn run_uncapped(&self, n: usize) -> Result<Vec<Check>> {
        if n < self.min_n {
            return Err(Error::DegreeOutOfRange(n));
        }
        (self.run)(n)
    }
}

/// Runs one claim over every `n` in `range`.
pub fn verify_claim(id: &str, range: impl IntoIterator<Item = usize>) -> Result<VerifyReport> {
    let claim = find_claim(id)?;
    let mut checks = Vec::new();
    for n in range {
        checks.extend(claim.run(n)?);
    }
    let passed = checks.iter().all(|c| c.ok);
    Ok(VerifyReport { claim: id.to_string(), checks, passed })
}

fn row(claim: &str, n: usize, check: &str, expected: impl Display, got: impl Display) -> Check {
    let (expected, got) = (expected.to_string(), got.to_string());
    Check { claim: claim.into(), n, check: check.into(), ok: expected == got, expected, got }
}

fn flag(claim: &str, n: usize, check: &str, got: bool) -> Check {
    row(claim, n, check, true, got)
}

fn family_counts(n: usize) -> Result<Vec<Check>> {
    Ok([Family::L, Family::U, Family::A, Family::Z]
        .into_iter()
        .map(|f| row("family-counts", n, &format!("|{f:?}_n|"), f.expected_size(n), generate_family(n, f).len()))
        .collect())
}

fn avoiders(n: usize, pats: &[Permutation]) -> Vec<Permutation> {
    symmetric_group(n).into_iter().filter(|p| p.avoids_all(pats)).collect()
}

fn pattern_classes(n: usize) -> Result<Vec<Check>> {
    let c = "patterns";
    Ok(vec![
        flag(c, n, "A_n = Av(arc patterns)", avoiders(n, &arc_patterns()) == generate_family(n, Family::A)),
        flag(c, n, "U_n = Av(unimodal patterns)", avoiders(n, &unimodal_patterns()) == generate_family(n, Family::U)),
        flag(c, n, "L_n = Av(132, 312)", avoiders(n, &left_unimodal_patterns()) == generate_family(n, Family::L)),
        flag(c, n, "barSh_n = Av(321, 2143, 2413)", avoiders(n, &patterns(&["321", "2143", "2413"])) == shuffle_union(n)),
    ])
}

/// `2 · C(n,2)! · ∏ i!/(2i+1)!` for `n ≥ 3`. Below that both halves of
/// `U_n` are the same chain, so there is exactly one.
pub fn weak_u_chain_formula(n: usize) -> BigUint {
    if n < 3 {
        return BigUint::from(1u32);
    }
    count_shifted_staircase(n) * 2u32
}

fn maximal_chains(n: usize) -> Result<Vec<Check>> {
    let poset = build_weak_hasse(n, Ground::U)?;
    Ok(vec![row("maximal-chains", n, "chains(Weak(U_n))", weak_u_chain_formula(n), count_all_maximal_chains(&poset)?)])
}

fn arc_graph_geodesics(n: usize) -> Result<Vec<Check>> {
    let c = "arc-graph";
    let x = build_arc_graph(n)?;
    let (e, w0) = (Permutation::identity(n), Permutation::longest(n));
    let geo: BTreeSet<Permutation> = x.geodesic_vertices(&e, &w0)?.into_iter().collect();
    let u: BTreeSet<Permutation> = generate_family(n, Family::U).into_iter().collect();
    let m = n * (n - 1) / 2;
    Ok(vec![
        row(c, n, "diameter", m, x.diameter()),
        row(c, n, "d(e, w0)", m, x.distance(&e, &w0)?),
        flag(c, n, "geodesic vertices = U_n", geo == u),
        row(c, n, "geodesic count", weak_u_chain_formula(n), x.geodesic_count(&e, &w0)?),
    ])
}

fn encodings(n: usize) -> Result<Vec<Check>> {
    let c = "encodings";
    let arcs = generate_family(n, Family::A);
    let mut psi_ok = true;
    let mut nu_ok = true;
    for p in &arcs {
        psi_ok &= PsiCode::encode(p)?.decode() == *p;
        nu_ok &= DescentWord::encode(p)?.decode() == *p;
    }
    let psi_codes: BTreeSet<String> = arcs.iter().map(|p| PsiCode::encode(p).map(|c| c.to_string())).collect::<Result<_>>()?;
    Ok(vec![
        flag(c, n, "psi round trip", psi_ok),
        flag(c, n, "nu round trip", nu_ok),
        row(c, n, "distinct psi codes", arcs.len(), psi_codes.len()),
        row(c, n, "|psi code space|", arcs.len(), PsiCode::all(n).len()),
    ])
}

fn dominance(n: usize) -> Result<Vec<Check>> {
    let c = "dominance";
    let poset = dominance_poset(n)?;
    let hasse = poset.hasse_graph();
    let mut formula_ok = true;
    for i in 0..poset.len() {
        let dist = hasse.bfs(i);
        for j in 0..poset.len() {
            formula_ok &= dist[j] == Some(dominance_distance(&poset.elements()[i], &poset.elements()[j])?);
        }
    }
    let iso = check_iso_with_dominance(n)?;
    Ok(vec![
        flag(c, n, "distance formula = BFS", formula_ok),
        flag(c, n, "X_n = Hasse + wrap edges", iso.isomorphic),
        row(c, n, "wrap edges", 1usize << (n - 3), iso.wrap_edges),
        flag(c, n, "adjacency cases", iso.adjacency_rule_holds),
    ])
}

fn descent_closed_forms(n: usize) -> Result<Vec<Check>> {
    let c = "descent-closed-forms";
    let arcs = generate_family(n, Family::A);
    let z = generate_family(n, Family::Z);
    Ok(vec![
        flag(c, n, "A_n", arc_descent_closed_form(n) == DescentDistribution::of_permutations(n, &arcs)),
        flag(c, n, "U_n", unimodal_descent_closed_form(n) == descent_distribution_of_family(n, Family::U)),
        flag(c, n, "Z_n", non_unimodal_descent_closed_form(n) == DescentDistribution::of_permutations(n, &z)),
        flag(c, n, "Hook_n", hook_descent_closed_form(n) == hook_distribution(n)),
        flag(c, n, "T_n", t_descent_closed_form(n) == DescentDistribution::of_tableaux(n, &generate_t_n(n))),
        row(c, n, "maj over A_n", arc_maj_closed_form(n), maj_polynomial(&arcs)),
        row(c, n, "maj over Z_n", z_maj_closed_form(n), maj_polynomial(&z)),
    ])
}

fn tz(n: usize) -> Result<Vec<Check>> {
    Ok(vec![flag("tz-equidistribution", n, "Des on T_n = Des on Z_n", tz_equidistribution(n))])
}

fn bijections(n: usize) -> Result<Vec<Check>> {
    let c = "bijections";
    let z = generate_family(n, Family::Z);
    let t: BTreeSet<_> = generate_t_n(n).into_iter().collect();
    let (mut phi_img, mut psi_img) = (BTreeSet::new(), BTreeSet::new());
    let (mut des_ok, mut shapes_ok, mut inverse_ok) = (true, true, true);
    for p in &z {
        let a = phi(p)?;
        let b = psi_shape_map(p)?;
        des_ok &= a.descent_set() == p.descent_set();
        shapes_ok &= a.shape() == b.shape() && is_in_t_n(&a) && is_in_t_n(&b);
        inverse_ok &= phi_inverse(&a)? == *p && psi_shape_inverse(&b)? == *p;
        phi_img.insert(a);
        psi_img.insert(b);
    }
    Ok(vec![
        flag(c, n, "phi(Z_n) = T_n", phi_img == t),
        flag(c, n, "shape map (Z_n) = T_n", psi_img == t),
        flag(c, n, "phi preserves Des", des_ok),
        flag(c, n, "shapes agree", shapes_ok),
        flag(c, n, "inverses", inverse_ok),
    ])
}

fn mu_enumeration(n: usize) -> Result<Vec<Check>> {
    partitions(n)
        .into_iter()
        .map(|mu| Ok(row("mu-enumeration", n, &format!("mu={mu}"), count_arc_mu(n, &mu)?, count_arc_mu_brute(n, &mu)?)))
        .collect()
}

fn regev(n: usize) -> Result<Vec<Check>> {
    let report = regev_report(n)?;
    Ok(report
        .rows
        .into_iter()
        .flat_map(|r| {
            [
                row("regev", n, &format!("mu={} decomposition", r.mu), r.closed_form, r.decomposition),
                row("regev", n, &format!("mu={} signed sum", r.mu), r.closed_form, r.signed_sum),
            ]
        })
        .collect())
}

fn coxeter(n: usize) -> Result<Vec<Check>> {
    Ok(vec![row("coxeter", n, "relation violations", 0, coxeter_violations(n)?.len())])
}

fn schreier(n: usize) -> Result<Vec<Check>> {
    let orbits = b_orbits(n)?;
    let fibers = orbits
        .iter()
        .enumerate()
        .all(|(k, o)| o.len() == 1 << (n - 2) && o.iter().all(|p| p.at(1) == k + 1));
    Ok(vec![
        flag("schreier", n, "Schreier graph = X_n", schreier_graph_check(n)?),
        row("schreier", n, "B orbit count", n, orbits.len()),
        flag("schreier", n, "orbits are first-letter fibers", fibers),
    ])
}

fn shuffles(n: usize) -> Result<Vec<Check>> {
    Ok(vec![
        row("shuffles", n, "|barSh_n|", (1usize << n) - n, shuffle_union(n).len()),
        flag("shuffles", n, "pattern class", crate::shuffles::shuffle_pattern_check(n)?),
    ])
}

fn rectangle_fillings(n: usize) -> Result<Vec<Check>> {
    (1..n)
        .filter(|k| k * (n - k) <= 16)
        .map(|k| Ok(flag("rectangle-fillings", n, &format!("{k}x{}", n - k), rectangle_filling_check(k, n - k)?)))
        .collect()
}

fn shuffle_weak_order(n: usize) -> Result<Vec<Check>> {
    let c = "shuffle-weak-order";
    let report = shuffle_weak_order_check(n)?;
    let mut out = vec![flag(c, n, "maxima are the pi_k", report.maxima_ok)];
    for r in report.rows {
        out.push(row(c, n, &format!("|[e, {}]|", r.top), &r.expected_size, r.interval_size));
        out.push(flag(c, n, &format!("[e, {}] = Sh", r.top), r.interval_is_shuffles));
        out.push(row(c, n, &format!("chains [e, {}]", r.top), &r.expected_chains, &r.chains));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_ids_are_unique() {
        let ids: BTreeSet<&str> = registry().iter().map(|c| c.id).collect();
        assert_eq!(ids.len(), registry().len());
        assert!(find_claim("nope").is_err());
    }

    #[test]
    fn maximal_chain_values() {
        let report = verify_claim("maximal-chains", 3..=5).unwrap();
        let expected: Vec<&str> = report.checks.iter().map(|c| c.expected.as_str()).collect();
        assert_eq!(expected, vec!["2", "4", "24"]);
        assert!(report.passed);
    }

    #[test]
    fn every_claim_passes_at_small_n() {
        for claim in registry() {
            for n in claim.min_n..=claim.max_n.min(5) {
                let rows = claim.run(n).unwrap();
                assert!(!rows.is_empty(), "{} at {n}", claim.id);
                assert!(rows.iter().all(|r| r.ok), "{} at {n}: {rows:?}", claim.id);
            }
        }
    }

    #[test]
    fn out_of_range_is_an_error() {
        assert!(find_claim("bijections").unwrap().run(3).is_err());
        assert!(verify_claim("regev", [1]).is_err());
    }
}
