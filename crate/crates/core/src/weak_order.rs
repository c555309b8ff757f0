//! The right weak order on `S_n` and its restriction to unimodal
//! permutations.

use std::collections::HashMap;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::families::{generate_family, is_left_unimodal, Family};
use crate::perm::{symmetric_group, Permutation};
use crate::poset::{FinitePoset, LatticeReport};
use crate::tableaux::shape_of_unimodal;

/// Largest degree accepted by [`build_weak_hasse`] for each ground set.
pub const MAX_HASSE_DEGREE_U: usize = 12;
pub const MAX_HASSE_DEGREE_S: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ground {
    /// Unimodal permutations.
    U,
    /// The whole symmetric group.
    S,
}

impl FromStr for Ground {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "U" | "u" => Ok(Ground::U),
            "S" | "s" => Ok(Ground::S),
            _ => Err(Error::InvalidInput(format!("unknown ground set `{s}`"))),
        }
    }
}

/// `p ≤ t` iff `ℓ(p) + ℓ(p⁻¹t) = ℓ(t)`. Permutations of different degrees
/// are incomparable.
pub fn weak_leq(p: &Permutation, t: &Permutation) -> bool {
    match p.inverse().compose(t) {
        Ok(q) => p.length() + q.length() == t.length(),
        Err(_) => false,
    }
}

/// Is `p` in `w0 L_n w0`, i.e. is every suffix of `p` an interval of `[n]`?
fn is_right_unimodal(p: &Permutation) -> bool {
    is_left_unimodal(&p.conjugate_by_longest())
}

/// Weak-order comparison of unimodal permutations through their shapes: both
/// on the same side and the shapes nested.
pub fn shape_domination_leq(p: &Permutation, t: &Permutation) -> Result<bool> {
    let sp = shape_of_unimodal(p)?;
    let st = shape_of_unimodal(t)?;
    if p.degree() != t.degree() {
        return Err(Error::DegreeMismatch { left: p.degree(), right: t.degree() });
    }
    let same_side = (is_left_unimodal(p) && is_left_unimodal(t))
        || (is_right_unimodal(p) && is_right_unimodal(t));
    Ok(same_side && st.contains(&sp))
}

/// The weak order on `U_n` or `S_n`, with covers the length-raising steps
/// `p → pσ_i` that stay in the ground set.
pub fn build_weak_hasse(n: usize, ground: Ground) -> Result<FinitePoset<Permutation>> {
    let (elements, limit) = match ground {
        Ground::U => (generate_family(n, Family::U), MAX_HASSE_DEGREE_U),
        Ground::S => (symmetric_group(n), MAX_HASSE_DEGREE_S),
    };
    if n == 0 || n > limit {
        return Err(Error::DegreeOutOfRange(n));
    }
    weak_hasse_on(elements)
}

/// The subposet of the weak order induced by `elements`, assuming every
/// cover of the induced order is a single `σ_i` step. This holds for `U_n`,
/// `S_n` and other order-convex sets; [`induced_weak_order`] makes no such
/// assumption.
pub fn weak_hasse_on(elements: Vec<Permutation>) -> Result<FinitePoset<Permutation>> {
    let index: HashMap<&Permutation, usize> =
        elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut covers = Vec::new();
    for (i, p) in elements.iter().enumerate() {
        for k in 1..p.degree() {
            if p.at(k) < p.at(k + 1) {
                if let Some(&j) = index.get(&p.swap_positions(k)) {
                    covers.push((i, j));
                }
            }
        }
    }
    FinitePoset::from_covers(elements, &covers)
}

/// The subposet of the weak order induced by `elements`, covers computed as
/// the transitive reduction of [`weak_leq`].
pub fn induced_weak_order(elements: Vec<Permutation>) -> Result<FinitePoset<Permutation>> {
    FinitePoset::from_relation(elements, weak_leq)
}

pub fn check_lattice_properties(poset: &FinitePoset<Permutation>) -> LatticeReport {
    poset.lattice_report()
}

pub fn count_maximal_chains(
    poset: &FinitePoset<Permutation>,
    lo: &Permutation,
    hi: &Permutation,
) -> Result<BigUint> {
    poset.count_maximal_chains(poset.index_of(lo)?, poset.index_of(hi)?)
}

/// Maximal chains of the whole poset, from its bottom to its top.
pub fn count_all_maximal_chains(poset: &FinitePoset<Permutation>) -> Result<BigUint> {
    let bottom = poset.bottom().ok_or_else(|| Error::InvalidPoset("no unique minimum".into()))?;
    let top = poset.top().ok_or_else(|| Error::InvalidPoset("no unique maximum".into()))?;
    poset.count_maximal_chains(bottom, top)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::{binomial, count_fillings, count_shifted_staircase};

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn weak_leq_examples() {
        let e = Permutation::identity(4);
        for t in symmetric_group(4) {
            assert!(weak_leq(&e, &t));
            assert!(weak_leq(&t, &t));
            assert!(weak_leq(&t, &Permutation::longest(4)));
        }
        assert!(!weak_leq(&p("2143"), &p("3412")));
        assert!(weak_leq(&p("2134"), &p("2314")));
        assert!(!weak_leq(&p("123"), &p("1234")));
    }

    #[test]
    fn weak_leq_matches_prefix_inversion_sets() {
        // p ≤ t iff the inversion set (as value pairs) of p is contained in t's
        let inv = |q: &Permutation| {
            let mut set = Vec::new();
            for a in 1..=q.degree() {
                for b in a + 1..=q.degree() {
                    if q.position_of(a) > q.position_of(b) {
                        set.push((a, b));
                    }
                }
            }
            set
        };
        let s4 = symmetric_group(4);
        for x in &s4 {
            for y in &s4 {
                let contained = inv(x).iter().all(|pair| inv(y).contains(pair));
                assert_eq!(weak_leq(x, y), contained, "{x} {y}");
            }
        }
    }

    #[test]
    fn domination_criterion_agrees() {
        for n in 1..=6 {
            let u = generate_family(n, Family::U);
            for x in &u {
                for y in &u {
                    assert_eq!(shape_domination_leq(x, y).unwrap(), weak_leq(x, y), "{x} {y}");
                }
            }
        }
        assert!(shape_domination_leq(&p("2143"), &p("4321")).is_err());
        assert!(shape_domination_leq(&Permutation::identity(5), &Permutation::longest(5)).unwrap());
        assert_eq!(
            shape_domination_leq(&p("2134"), &p("4312")).unwrap(),
            weak_leq(&p("2134"), &p("4312"))
        );
    }

    #[test]
    fn length_is_shape_size() {
        for n in 1..=8 {
            for q in generate_family(n, Family::U) {
                assert_eq!(q.length(), shape_of_unimodal(&q).unwrap().size());
            }
        }
    }

    #[test]
    fn sigma_covers_are_induced_covers() {
        for n in 1..=5 {
            let by_steps = build_weak_hasse(n, Ground::U).unwrap();
            let reduced = induced_weak_order(generate_family(n, Family::U)).unwrap();
            assert_eq!(by_steps.covers(), reduced.covers());
        }
        let s4 = build_weak_hasse(4, Ground::S).unwrap();
        assert_eq!(s4.covers(), induced_weak_order(symmetric_group(4)).unwrap().covers());
    }

    #[test]
    fn hasse_basics() {
        let u4 = build_weak_hasse(4, Ground::U).unwrap();
        assert_eq!(u4.len(), 14);
        let rank = u4.rank_function().unwrap();
        assert_eq!(rank.iter().max(), Some(&6));
        let u3 = build_weak_hasse(3, Ground::U).unwrap();
        let s3 = build_weak_hasse(3, Ground::S).unwrap();
        assert_eq!(u3.covers(), s3.covers());
        assert_eq!(u3.hasse_graph().edge_count(), 6);
        assert!(build_weak_hasse(8, Ground::S).is_err());
        assert!(build_weak_hasse(0, Ground::U).is_err());
    }

    #[test]
    fn lattice_properties() {
        // two distributive halves glued at e and w0: not modular once n ≥ 3
        let glued = LatticeReport { is_lattice: true, is_graded: true, is_modular: false, is_self_dual: true };
        let all = LatticeReport { is_modular: true, ..glued };
        for n in 3..=6 {
            let u = build_weak_hasse(n, Ground::U).unwrap();
            assert_eq!(check_lattice_properties(&u), glued, "n = {n}");
            let left = weak_hasse_on(generate_family(n, Family::L)).unwrap();
            assert_eq!(check_lattice_properties(&left), all, "n = {n}");
        }
        assert_eq!(check_lattice_properties(&build_weak_hasse(2, Ground::U).unwrap()), all);
        let u4 = build_weak_hasse(4, Ground::U).unwrap();
        let x = u4.index_of(&p("1243")).unwrap();
        let y = u4.index_of(&p("2134")).unwrap();
        assert_eq!(u4.elements()[u4.meet(x, y).unwrap()], Permutation::identity(4));
        assert_eq!(u4.elements()[u4.join(x, y).unwrap()], Permutation::longest(4));

        let s4 = check_lattice_properties(&build_weak_hasse(4, Ground::S).unwrap());
        assert!(s4.is_lattice && s4.is_graded && s4.is_self_dual);
        assert!(!s4.is_modular);
    }

    #[test]
    fn maximal_chain_counts() {
        let expected = [2u32, 4, 24, 572];
        for (n, want) in (3..=6).zip(expected) {
            let u = build_weak_hasse(n, Ground::U).unwrap();
            let got = count_all_maximal_chains(&u).unwrap();
            assert_eq!(got, BigUint::from(want));
            assert_eq!(got, BigUint::from(2u32) * count_shifted_staircase(n));
        }
        let u4 = build_weak_hasse(4, Ground::U).unwrap();
        assert!(count_maximal_chains(&u4, &Permutation::longest(4), &Permutation::identity(4)).is_err());
        assert!(count_maximal_chains(&u4, &p("2143"), &Permutation::longest(4)).is_err());
    }

    #[test]
    fn lower_intervals_count_shifted_tableaux() {
        for n in 2..=6 {
            let u = build_weak_hasse(n, Ground::U).unwrap();
            let e = Permutation::identity(n);
            let w0 = Permutation::longest(n);
            for q in u.elements() {
                if *q == w0 {
                    continue;
                }
                let shape = shape_of_unimodal(q).unwrap();
                assert_eq!(
                    count_maximal_chains(&u, &e, q).unwrap(),
                    count_fillings(shape.parts(), true),
                    "{q}"
                );
            }
        }
    }

    #[test]
    fn hasse_diagram_metrics() {
        for n in 2..=6 {
            let u = build_weak_hasse(n, Ground::U).unwrap();
            let g = u.hasse_graph();
            let c2 = binomial(n, 2);
            let e = u.index_of(&Permutation::identity(n)).unwrap();
            let w0 = u.index_of(&Permutation::longest(n)).unwrap();
            assert_eq!(BigUint::from(g.diameter().unwrap()), c2);
            assert_eq!(BigUint::from(g.distance(e, w0).unwrap()), c2);
            if n > 2 {
                assert_eq!(g.geodesic_count(e, w0), BigUint::from(2u32) * count_shifted_staircase(n));
            }
            let rank = u.rank_function().unwrap();
            let top = rank[w0];
            for x in 0..u.len() {
                let dist = g.bfs(x);
                for y in 0..u.len() {
                    let (a, b) = (&u.elements()[x], &u.elements()[y]);
                    let same_side = (is_left_unimodal(a) && is_left_unimodal(b))
                        || (is_right_unimodal(a) && is_right_unimodal(b));
                    let expected = if same_side {
                        rank[u.join(x, y).unwrap()] - rank[u.meet(x, y).unwrap()]
                    } else {
                        (rank[x] + rank[y]).min(2 * top - rank[x] - rank[y])
                    };
                    assert_eq!(dist[y], Some(expected), "{a} {b}");
                }
            }
        }
    }
}
