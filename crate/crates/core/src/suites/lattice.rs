//! Lattice and divisor-count suites.

use std::collections::HashSet;

use crate::picard::{
    divisor_candidates, exceptional_candidates, lattice_checks, partition_orbits, theorem_counts, PicardClass,
    BAD_PER_ORBIT, DEGENERATE_PER_ORBIT,
};
use crate::report::{CheckEntry, Provenance, ReportFragment, Status};

pub fn lattice_suite() -> ReportFragment {
    lattice_checks()
}

pub fn counts_suite() -> ReportFragment {
    let anchor = "1200 candidate classes, at least 1080 good and 840 excellent";
    let exceptional = exceptional_candidates();
    let candidates = divisor_candidates();
    let numerics_ok = exceptional.iter().all(|e| e.self_intersection() == -2 && e.dot_canonical() == 0);
    let distinct: HashSet<&PicardClass> = candidates.iter().collect();
    let mut out = vec![
        CheckEntry::equal("counts.candidates", anchor, Provenance::Published, 1200, distinct.len()),
        CheckEntry::holds("counts.candidate_numerics", "E^2 = -2 and E.K = 0", Provenance::Published, numerics_ok),
    ];
    match partition_orbits() {
        Ok(orbits) => {
            let covered: usize = orbits.iter().map(|o| o.len()).sum();
            let counts = theorem_counts(&orbits);
            out.extend([
                CheckEntry::equal("counts.orbits", "orbits of ten classes", Provenance::Published, 120, orbits.len()),
                CheckEntry::holds(
                    "counts.orbit_size",
                    "orbits of ten classes",
                    Provenance::Published,
                    orbits.iter().all(|o| o.len() == 10),
                ),
                CheckEntry::equal("counts.partition", "orbits of ten classes", Provenance::Derived, distinct.len(), covered),
                CheckEntry::equal("counts.bad_per_orbit", "at most one bad class per orbit", Provenance::Published, 1, BAD_PER_ORBIT),
                CheckEntry::equal("counts.good_lower_bound", anchor, Provenance::Published, 1080, counts.good_lower_bound),
                CheckEntry::equal(
                    "counts.degenerate_per_orbit",
                    "at most two classes per orbit with a pencil",
                    Provenance::ModelDerived,
                    2,
                    DEGENERATE_PER_ORBIT,
                ),
                CheckEntry::equal("counts.excellent_lower_bound", anchor, Provenance::ModelDerived, 840, counts.excellent_lower_bound),
            ]);
        }
        Err(e) => out.push(CheckEntry::new(
            "counts.orbits",
            "orbits of ten classes",
            Provenance::Published,
            120,
            format!("error: {e}"),
            Status::Fail,
        )),
    }
    out.push(CheckEntry::new(
        "counts.bad_vanishing",
        "h0(O(D)) = 0 for good classes",
        Provenance::AssumedPublished,
        "h0 = 0 off one class per orbit",
        "recorded, not computed",
        Status::Undecidable,
    ));
    out
}
