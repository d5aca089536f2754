//! Numerical invariants: quotient, genus, Euler characteristics and the
//! Hilbert condition on every candidate pair.

use num_rational::Rational64;
use rayon::prelude::*;

use crate::picard::{check_divisor_conditions, curve_classes, divisor_candidates};
use crate::report::{CheckEntry, Provenance, ReportFragment, Status};
use crate::rr::{
    adjunction_genus, chi_curve_sheaf, chi_divisor, excellent_chi_check, growth_fit, noether_euler,
    prespectral_hilbert_check, prespectral_target, quotient_invariants, SurfaceInvariants,
};

/// Largest `n` in the Hilbert condition sweep.
pub const HILBERT_N_MAX: u32 = 10;

pub fn rr_suite() -> ReportFragment {
    let quintic = SurfaceInvariants::quintic();
    let mut out = Vec::new();
    let quotient_anchor = "free quotient of the quintic has chi = K^2 = 1, e = 11";
    let godeaux = match quotient_invariants(&quintic, 5, 0, 0) {
        Ok(s) => {
            out.push(CheckEntry::equal(
                "rr.quotient",
                quotient_anchor,
                Provenance::Published,
                "(1,1,11)".to_string(),
                format!("({},{},{})", s.chi(), s.k2(), s.euler_number()),
            ));
            s
        }
        Err(e) => {
            out.push(CheckEntry::new("rr.quotient", quotient_anchor, Provenance::Published, "(1,1,11)", format!("error: {e}"), Status::Fail));
            SurfaceInvariants::godeaux()
        }
    };
    out.push(CheckEntry::equal(
        "rr.cover",
        "smooth quintic in P3",
        Provenance::Derived,
        "(5,5,55)".to_string(),
        format!("({},{},{})", quintic.chi(), quintic.k2(), quintic.euler_number()),
    ));
    out.push(CheckEntry::equal("rr.b2", "second Betti number 9", Provenance::Published, 9, godeaux.b2()));
    out.push(CheckEntry::holds(
        "rr.noether",
        "12 chi = K^2 + e",
        Provenance::Trivial,
        noether_euler(godeaux.chi(), godeaux.k2()) == godeaux.euler_number()
            && noether_euler(quintic.chi(), quintic.k2()) == quintic.euler_number(),
    ));

    let curves = curve_classes();
    let c = curves[0].numerical();
    out.push(CheckEntry::equal("rr.curve_genus", "C^2 = C.K = 1 gives genus 2", Provenance::Published, 2, adjunction_genus(&c)));

    let candidates = divisor_candidates();
    let pairs: Vec<_> = candidates.iter().flat_map(|d| curves.iter().map(move |c| (d, c))).collect();
    let d_dot_c_ok = pairs.par_iter().filter(|(d, c)| d.intersect(c) == 1).count();
    out.push(CheckEntry::equal("rr.d_dot_c", "(D, C) = 1 = g - 1", Provenance::Published, pairs.len(), d_dot_c_ok));
    let chi_zero = candidates.par_iter().filter(|d| chi_divisor(&godeaux, &d.numerical()) == 0).count();
    out.push(CheckEntry::equal("rr.chi_candidates", "chi(O(D)) = 0 for every candidate", Provenance::Published, 1200, chi_zero));
    let conditions = pairs.par_iter().filter(|(d, c)| check_divisor_conditions(d, c).holds()).count();
    out.push(CheckEntry::equal("rr.divisor_conditions", "divisor and curve conditions", Provenance::Derived, pairs.len(), conditions));

    let hilbert_anchor = "chi(O(D + (n+1)C)) = (n+1)(n+2)/2";
    let by_numbers = pairs
        .par_iter()
        .filter(|(d, c)| prespectral_hilbert_check(&godeaux, &d.numerical(), &c.numerical(), d.intersect(c), HILBERT_N_MAX))
        .count();
    // the same sweep through class arithmetic, without the numerical shortcut
    let by_classes = pairs
        .par_iter()
        .filter(|(d, c)| {
            (0..=HILBERT_N_MAX as i64).all(|n| {
                let class = **d + c.scale(n + 1);
                chi_divisor(&godeaux, &class.numerical()) == prespectral_target(n, 1)
            })
        })
        .count();
    out.push(CheckEntry::equal("rr.hilbert_condition", hilbert_anchor, Provenance::Published, pairs.len(), by_numbers));
    out.push(CheckEntry::equal("rr.hilbert_condition_classes", hilbert_anchor, Provenance::Derived, pairs.len(), by_classes));
    let excellent = pairs
        .par_iter()
        .filter(|(d, c)| excellent_chi_check(&godeaux, &d.numerical(), &c.numerical(), d.intersect(c), HILBERT_N_MAX))
        .count();
    out.push(CheckEntry::equal(
        "rr.excellent_chi",
        "chi(F((n-1)C)) = n(n+1)/2",
        Provenance::Derived,
        pairs.len(),
        excellent,
    ));

    let fit = growth_fit(&godeaux, &c, 2 * HILBERT_N_MAX);
    out.push(CheckEntry::new(
        "rr.growth",
        "dim B_m ~ m^2/2",
        Provenance::Published,
        "1/2",
        fit.leading,
        if fit.exact && fit.leading == Rational64::new(1, 2) { Status::Pass } else { Status::Fail },
    ));
    out.push(CheckEntry::equal(
        "rr.canonical_on_curve",
        "K restricted to C has degree 1",
        Provenance::Derived,
        "0".to_string(),
        chi_curve_sheaf(c.dot_k(), adjunction_genus(&c)).map_or_else(|e| format!("error: {e}"), |v| v.to_string()),
    ));
    out.push(CheckEntry::new(
        "rr.restriction_vanishing",
        "cohomology of the restriction to C vanishes",
        Provenance::AssumedPublished,
        "h0 = h1 = 0",
        "recorded, not computed",
        Status::Undecidable,
    ));
    out
}
