//! Direct check of the Berge condition for a single profile, independent of
//! the search in [`crate::mixed`].

use num_traits::One;

use crate::error::{Error, Result};
use crate::game::{Game, MixedProfile};
use crate::mixed::BergeReport;
use crate::rational::{ratio_of, Rational};

/// True iff no joint deviation of the other players can raise any player's
/// expected payoff above its value at `profile`.
///
/// Only pure deviations are tried: with player `i`'s own probability fixed,
/// the payoff is multilinear in the others' probabilities, so its maximum
/// over their mixed strategies sits at a pure vertex.
pub fn verify_berge(g: &Game, profile: &MixedProfile) -> Result<bool> {
    let n = g.n();
    g.check_profile(profile.len())?;
    for i in 0..n {
        let value = g.expected_payoff(profile, i)?;
        for deviation in 0..g.profile_count() {
            let probs = (0..n)
                .map(|j| {
                    if j == i {
                        profile.probs()[i].clone()
                    } else if deviation >> (n - 1 - j) & 1 == 0 {
                        Rational::one()
                    } else {
                        num_traits::Zero::zero()
                    }
                })
                .collect();
            let deviated = MixedProfile::new(probs)?;
            if g.expected_payoff(&deviated, i)? > value {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// All profiles on the grid `{0, 1/k, ..., 1}^n` that pass
/// [`verify_berge`], in ascending lexicographic order.
pub fn grid_oracle(g: &Game, resolution: usize) -> Result<Vec<MixedProfile>> {
    if resolution == 0 {
        return Err(Error::OutOfRange {
            what: "grid resolution",
            index: 0,
            limit: 1,
        });
    }
    let mut found = Vec::new();
    for profile in grid(g.n(), resolution) {
        if verify_berge(g, &profile)? {
            found.push(profile);
        }
    }
    Ok(found)
}

/// Every point of `{0, 1/k, ..., 1}^n`, first coordinate slowest.
pub fn grid(n: usize, resolution: usize) -> impl Iterator<Item = MixedProfile> {
    let steps = resolution + 1;
    let total = steps.pow(n as u32);
    (0..total).map(move |mut code| {
        let mut probs = vec![Rational::one(); n];
        for slot in probs.iter_mut().rev() {
            *slot = ratio_of(code % steps, resolution);
            code /= steps;
        }
        MixedProfile::new(probs).expect("grid values lie in [0, 1]")
    })
}

/// Whether some box of `report` contains `profile`.
pub fn boxes_contain(report: &BergeReport, profile: &MixedProfile) -> Result<bool> {
    if profile.len() != report.n {
        return Err(Error::Dimension {
            expected: report.n,
            found: profile.len(),
        });
    }
    Ok(report.contains(profile))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::mixed::all_berge;
    use crate::pure::pure_berge;
    use crate::rational::{int, ratio};

    fn mixed(values: &[(i64, i64)]) -> MixedProfile {
        MixedProfile::new(values.iter().map(|&(a, b)| ratio(a, b)).collect()).unwrap()
    }

    #[test]
    fn verify_examples() {
        let g2 = fixtures::unique_mixed();
        assert!(verify_berge(&g2, &mixed(&[(1, 2), (1, 3), (3, 5)])).unwrap());
        let fst = fixtures::sportsmen_trainer();
        assert!(verify_berge(&fst, &mixed(&[(1, 1), (1, 1), (1, 1)])).unwrap());
        assert!(!verify_berge(&fst, &mixed(&[(1, 4), (3, 4), (1, 1)])).unwrap());
        let g1 = fixtures::no_influence();
        assert!(!verify_berge(&g1, &mixed(&[(1, 2), (1, 2), (1, 2)])).unwrap());
        assert!(verify_berge(&g1, &mixed(&[(1, 2), (1, 2)])).is_err());
    }

    #[test]
    fn grid_examples() {
        assert!(grid_oracle(&fixtures::no_influence(), 4)
            .unwrap()
            .is_empty());
        let got = grid_oracle(&fixtures::sportsmen_trainer(), 2).unwrap();
        let expected = vec![
            mixed(&[(1, 2), (1, 2), (1, 1)]),
            mixed(&[(1, 2), (1, 1), (1, 1)]),
            mixed(&[(1, 1), (1, 2), (1, 1)]),
            mixed(&[(1, 1), (1, 1), (1, 1)]),
        ];
        assert_eq!(got, expected);
        for g in [
            fixtures::no_influence(),
            fixtures::unique_mixed(),
            fixtures::sportsmen_trainer(),
        ] {
            let pure: Vec<MixedProfile> = pure_berge(&g).iter().map(|p| p.to_mixed()).collect();
            let mut on_grid = grid_oracle(&g, 1).unwrap();
            on_grid.sort_by_key(|m| m.as_pure().unwrap());
            assert_eq!(on_grid, pure);
        }
        assert!(grid_oracle(&fixtures::no_influence(), 0).is_err());
    }

    #[test]
    fn grid_order_and_size() {
        let points: Vec<MixedProfile> = grid(2, 2).collect();
        assert_eq!(points.len(), 9);
        assert_eq!(points[0], mixed(&[(0, 1), (0, 1)]));
        assert_eq!(points[1], mixed(&[(0, 1), (1, 2)]));
        assert_eq!(points[8], mixed(&[(1, 1), (1, 1)]));
        assert!(points.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn membership_examples() {
        let report = all_berge(&fixtures::sportsmen_trainer());
        assert!(boxes_contain(&report, &mixed(&[(3, 4), (3, 4), (1, 1)])).unwrap());
        let pure = mixed(&[(1, 1), (1, 1), (1, 1)]);
        let holders: Vec<_> = report.boxes.iter().filter(|b| b.contains(&pure)).collect();
        assert_eq!(holders.len(), 1);
        assert_eq!(holders[0].source, crate::mixed::Source::Pure);
        assert!(!boxes_contain(&report, &mixed(&[(3, 4), (3, 4), (1, 2)])).unwrap());
        assert!(boxes_contain(&report, &MixedProfile::new(vec![int(1)]).unwrap()).is_err());
    }
}
