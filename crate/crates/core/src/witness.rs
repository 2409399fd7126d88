//! Witnesses that a plane is not Pappian: a non-commuting pair in the
//! constructed line algebra and a configuration violating Pappus.

use rayon::prelude::*;

use crate::field::DivisionRing;
use crate::incidence::{
    describe_pappus, find_pappus_violation, pappus_conclusion, validate_pappus, Incidence, PappusConfig, PointOf,
};
use crate::line_algebra::{AuxPolicy, LineAlgebra};
use crate::sampling::Sampling;

/// `A ∗ C ≠ C ∗ A` on the line of the algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Commutator<P> {
    pub a: P,
    pub c: P,
    pub ac: P,
    pub ca: P,
}

#[derive(Debug, Clone)]
pub struct Witnesses<P> {
    pub commutator: Commutator<P>,
    pub commutator_samples: u64,
    pub pappus: PappusConfig<P>,
    pub pappus_samples: u64,
}

#[derive(Debug, Clone)]
pub enum WitnessSearch<P> {
    Found(Witnesses<P>),
    /// The budget ran out before the named witness turned up.
    Exhausted {
        missing: &'static str,
        samples: u64,
    },
}

/// Seeded search over pairs of points of the line, re-checked with every
/// auxiliary point of [`AuxPolicy::AllAndCompare`]. Returns the witness and
/// the samples drawn.
pub fn find_noncommuting_pair<G: Incidence>(
    k: &LineAlgebra<'_, G>,
    s: Sampling,
) -> (Option<Commutator<PointOf<G>>>, u64) {
    let g = k.geometry();
    let found = (0..s.samples).into_par_iter().find_map_first(|i| {
        let mut rng = s.rng(i);
        let mut on = || g.point_on(k.line(), &g.ring().random_element(&mut rng, s.rational_bound));
        let (a, c) = (on(), on());
        let ac = k.mul(&a, &c).ok()?;
        let ca = k.mul(&c, &a).ok()?;
        (ac != ca).then(|| (i, Commutator { a, c, ac, ca }))
    });
    match found {
        Some((i, w)) => {
            assert!(verify_commutator(k, &w), "commutator failed re-verification");
            (Some(w), i + 1)
        }
        None => (None, s.samples),
    }
}

pub fn verify_commutator<G: Incidence>(k: &LineAlgebra<'_, G>, w: &Commutator<PointOf<G>>) -> bool {
    let Ok(all) = k.with_policy(AuxPolicy::AllAndCompare) else { return false };
    all.mul(&w.a, &w.c).as_ref() == Ok(&w.ac) && all.mul(&w.c, &w.a).as_ref() == Ok(&w.ca) && w.ac != w.ca
}

/// Both searches share the budget `s.samples` each.
pub fn hunt_witnesses<G: Incidence>(k: &LineAlgebra<'_, G>, s: Sampling) -> WitnessSearch<PointOf<G>> {
    let (commutator, commutator_samples) = find_noncommuting_pair(k, s);
    let Some(commutator) = commutator else {
        return WitnessSearch::Exhausted { missing: "non-commuting pair", samples: commutator_samples };
    };
    let search = find_pappus_violation(k.geometry(), s);
    let Some(pappus) = search.witness else {
        return WitnessSearch::Exhausted { missing: "Pappus violation", samples: search.samples_used };
    };
    WitnessSearch::Found(Witnesses { commutator, commutator_samples, pappus, pappus_samples: search.samples_used })
}

/// Plain-text rendering with a re-check line per witness.
pub fn render<G: Incidence>(k: &LineAlgebra<'_, G>, w: &Witnesses<PointOf<G>>) -> String {
    let g = k.geometry();
    let f = |p| g.format_point(p);
    let c = &w.commutator;
    let pappus_ok = validate_pappus(g, &w.pappus).is_ok() && pappus_conclusion(g, &w.pappus) == Ok(false);
    format!(
        "line {} with O={} I={}\n\
         non-commuting pair (found within {} samples):\n  A={}\n  C={}\n  A*C={}\n  C*A={}\n  re-verified: {}\n\
         Pappus violation (found within {} samples):\n  {}\n  P3P4 not parallel to P6P1, re-verified: {}\n",
        g.format_line(k.line()),
        f(k.zero()),
        f(k.one()),
        w.commutator_samples,
        f(&c.a),
        f(&c.c),
        f(&c.ac),
        f(&c.ca),
        verify_commutator(k, c),
        w.pappus_samples,
        describe_pappus(g, &w.pappus),
        pappus_ok,
    )
}
