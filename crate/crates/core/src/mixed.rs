//! Completely mixed and mixed-type Berge equilibria, and the full search.
//!
//! Every equilibrium set is reported as an [`EquilibriumBox`]: a Cartesian
//! product of per-player constraints. The product structure is exact because
//! each player's conditions involve only that player's own probability once
//! the others' influence has been reduced to pure completions.
//!
//! A mixed-type search over a [`Partition`] `N = P ∪ M` runs in three steps:
//!
//! 1. keep the pure subprofiles of `P` under which no `P` player is ever
//!    disappointed, whatever pure strategies `M` plays;
//! 2. for each survivor, solve every `M` player's system of equalities in the
//!    subgame where `P` is fixed;
//! 3. compare each `M` player's resulting payoff line against all of their
//!    pure-completion lines and intersect the inequality solution sets.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::game::{player_bit, Game, MixedProfile};
use crate::linear::{intersect, solve_all_equal, solve_ge, Interval, LinearFn, SolutionSet};
use crate::pure::{disappointment_matrix, pure_berge_from, DisappointmentTable};
use crate::rational::Rational;
use num_traits::{One, Zero};

/// Ascending iterator over all submasks of `mask`.
fn submasks(mask: usize) -> impl Iterator<Item = usize> {
    let mut next = Some(0usize);
    std::iter::from_fn(move || {
        let current = next?;
        next = if current == mask {
            None
        } else {
            Some(current.wrapping_sub(mask) & mask)
        };
        Some(current)
    })
}

/// Split of the players into those playing pure strategies (`P`) and those
/// playing completely mixed ones (`M`). Both sides are non-empty.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    n: usize,
    /// Profile-index bits of the `P` players.
    pure_mask: usize,
}

impl Partition {
    pub fn new(n: usize, pure_players: &[usize]) -> Result<Self> {
        let mut mask = 0;
        for &i in pure_players {
            if i >= n {
                return Err(Error::OutOfRange {
                    what: "player",
                    index: i,
                    limit: n,
                });
            }
            mask |= player_bit(n, i);
        }
        Self::from_mask(n, mask)
    }

    /// `mask` uses the profile-index bit layout (player 0 most significant).
    pub fn from_mask(n: usize, mask: usize) -> Result<Self> {
        if !(2..=crate::game::HARD_MAX_PLAYERS).contains(&n) {
            return Err(Error::PlayerCount {
                n,
                max: crate::game::HARD_MAX_PLAYERS,
            });
        }
        let full = (1 << n) - 1;
        if mask == 0 || mask >= full {
            return Err(Error::OutOfRange {
                what: "partition mask",
                index: mask,
                limit: full,
            });
        }
        Ok(Self { n, pure_mask: mask })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pure_mask(&self) -> usize {
        self.pure_mask
    }

    pub fn mixed_mask(&self) -> usize {
        ((1 << self.n) - 1) & !self.pure_mask
    }

    pub fn is_pure(&self, player: usize) -> bool {
        self.pure_mask & player_bit(self.n, player) != 0
    }

    pub fn pure_players(&self) -> Vec<usize> {
        (0..self.n).filter(|&i| self.is_pure(i)).collect()
    }

    pub fn mixed_players(&self) -> Vec<usize> {
        (0..self.n).filter(|&i| !self.is_pure(i)).collect()
    }

    /// `FT–S` style label: pure players, en dash, mixed players.
    pub fn label(&self, names: &[String]) -> String {
        let join = |players: Vec<usize>| {
            let parts: Vec<&str> = players.iter().map(|&i| names[i].as_str()).collect();
            if parts.iter().all(|p| p.chars().count() == 1) {
                parts.concat()
            } else {
                parts.join(",")
            }
        };
        format!(
            "{}–{}",
            join(self.pure_players()),
            join(self.mixed_players())
        )
    }

    /// Profile-index bits of a pure subprofile given over `P` in player order.
    fn pack(&self, pure_part: &[u8]) -> usize {
        self.pure_players()
            .into_iter()
            .zip(pure_part)
            .filter(|(_, &b)| b == 1)
            .fold(0, |acc, (i, _)| acc | player_bit(self.n, i))
    }

    fn unpack(&self, bits: usize) -> Vec<u8> {
        self.pure_players()
            .into_iter()
            .map(|i| u8::from(bits & player_bit(self.n, i) != 0))
            .collect()
    }
}

/// All `2^n - 2` partitions with non-empty pure and mixed sides, ordered by
/// the pure side's bitmask.
pub fn enumerate_partitions(n: usize) -> Result<Vec<Partition>> {
    if !(2..=crate::game::HARD_MAX_PLAYERS).contains(&n) {
        return Err(Error::PlayerCount {
            n,
            max: crate::game::HARD_MAX_PLAYERS,
        });
    }
    (1..(1 << n) - 1)
        .map(|mask| Partition::from_mask(n, mask))
        .collect()
}

/// One coordinate of an equilibrium box.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PlayerConstraint {
    /// Fixed pure strategy (0 = first).
    Pure(u8),
    /// A single completely mixed probability.
    Point(Rational),
    Interval(Interval),
}

impl PlayerConstraint {
    fn from_set(set: SolutionSet) -> Option<Self> {
        match set {
            SolutionSet::Empty => None,
            SolutionSet::Point(v) => Some(PlayerConstraint::Point(v)),
            SolutionSet::Interval(iv) => Some(PlayerConstraint::Interval(iv)),
        }
    }

    /// Whether probability `x` of the first strategy satisfies this constraint.
    pub fn admits(&self, x: &Rational) -> bool {
        match self {
            PlayerConstraint::Pure(0) => x.is_one(),
            PlayerConstraint::Pure(_) => x.is_zero(),
            PlayerConstraint::Point(v) => v == x,
            PlayerConstraint::Interval(iv) => iv.contains(x),
        }
    }
}

impl fmt::Display for PlayerConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlayerConstraint::Pure(0) => f.write_str("1"),
            PlayerConstraint::Pure(_) => f.write_str("0"),
            PlayerConstraint::Point(v) => write!(f, "{v}"),
            PlayerConstraint::Interval(iv) => write!(f, "{iv}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Source {
    Pure,
    FullyMixed,
    MixedType {
        partition: Partition,
        /// Strategy bits of the pure players, in player order.
        pure_part: Vec<u8>,
    },
}

/// A product of per-player constraints, every point of which is a Berge
/// equilibrium.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EquilibriumBox {
    pub source: Source,
    pub constraints: Vec<PlayerConstraint>,
}

impl EquilibriumBox {
    pub fn contains(&self, profile: &MixedProfile) -> bool {
        profile.len() == self.constraints.len()
            && self
                .constraints
                .iter()
                .zip(profile.probs())
                .all(|(c, x)| c.admits(x))
    }
}

/// How far a partition's candidates got.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionDiagnostic {
    pub partition: Partition,
    /// Pure subprofiles that survived step 1.
    pub candidates: usize,
    /// Candidates without a subequilibrium in step 2.
    pub failed_step2: usize,
    /// Candidates whose refinement in step 3 came out empty.
    pub failed_step3: usize,
    pub boxes: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartitionOutcome {
    EliminatedAtStep1,
    EliminatedAtStep2,
    EliminatedAtStep3,
    Produced(usize),
}

impl PartitionDiagnostic {
    /// The furthest step any candidate reached before elimination.
    pub fn outcome(&self) -> PartitionOutcome {
        if self.boxes > 0 {
            PartitionOutcome::Produced(self.boxes)
        } else if self.candidates == 0 {
            PartitionOutcome::EliminatedAtStep1
        } else if self.failed_step3 > 0 {
            PartitionOutcome::EliminatedAtStep3
        } else {
            PartitionOutcome::EliminatedAtStep2
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostics {
    pub pure_equilibria: usize,
    /// Players whose completely mixed system has no solution in (0, 1).
    pub contradictory_players: Vec<usize>,
    pub partitions: Vec<PartitionDiagnostic>,
}

/// Every Berge equilibrium of a game, as disjoint boxes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BergeReport {
    pub n: usize,
    pub players: Vec<String>,
    pub fingerprint: String,
    pub boxes: Vec<EquilibriumBox>,
    pub diagnostics: Diagnostics,
}

impl BergeReport {
    pub fn contains(&self, profile: &MixedProfile) -> bool {
        self.boxes.iter().any(|b| b.contains(profile))
    }
}

/// `player`'s payoff lines against every pure completion of the others, in
/// ascending completion-index order. A completely mixed equilibrium needs
/// all of them to agree at the player's probability.
pub fn player_system(g: &Game, player: usize) -> Result<Vec<LinearFn>> {
    g.check_player(player)?;
    Ok((0..1usize << (g.n() - 1))
        .map(|others| g.line_for(player, others))
        .collect())
}

fn solve_fully_mixed(g: &Game) -> (Option<EquilibriumBox>, Vec<usize>) {
    let mut constraints = Vec::with_capacity(g.n());
    let mut contradictory = Vec::new();
    for i in 0..g.n() {
        let system = player_system(g, i).expect("player in range");
        let set = solve_all_equal(&system).expect("system is non-empty");
        match PlayerConstraint::from_set(set) {
            Some(c) => constraints.push(c),
            None => contradictory.push(i),
        }
    }
    if contradictory.is_empty() {
        let found = EquilibriumBox {
            source: Source::FullyMixed,
            constraints,
        };
        (Some(found), contradictory)
    } else {
        (None, contradictory)
    }
}

/// The completely mixed Berge equilibria, if any.
pub fn fully_mixed_berge(g: &Game) -> Option<EquilibriumBox> {
    solve_fully_mixed(g).0
}

fn check_partition(g: &Game, part: &Partition) -> Result<()> {
    if part.n() != g.n() {
        return Err(Error::Dimension {
            expected: g.n(),
            found: part.n(),
        });
    }
    Ok(())
}

fn step1_packed(table: &DisappointmentTable, part: &Partition) -> Vec<usize> {
    let pure = part.pure_players();
    let mixed_mask = part.mixed_mask();
    submasks(part.pure_mask())
        .filter(|&assignment| {
            submasks(mixed_mask).all(|completion| {
                let profile = assignment | completion;
                pure.iter().all(|&i| table.is_zero_at(profile, i))
            })
        })
        .collect()
}

/// Step 1: pure subprofiles of `P` that leave every `P` player undisappointed
/// under every pure completion of `M`. Each entry lists the strategy bits of
/// the pure players in player order.
pub fn step1_candidates(g: &Game, part: &Partition) -> Result<Vec<Vec<u8>>> {
    check_partition(g, part)?;
    let table = disappointment_matrix(g);
    Ok(step1_packed(&table, part)
        .into_iter()
        .map(|bits| part.unpack(bits))
        .collect())
}

/// Lines of mixed player `i` with `P` fixed at `assignment`, one per pure
/// completion of the other mixed players.
fn subgame_lines<'a>(
    g: &'a Game,
    part: &Partition,
    assignment: usize,
    i: usize,
) -> impl Iterator<Item = LinearFn> + 'a {
    let others = part.mixed_mask() & !player_bit(g.n(), i);
    submasks(others).map(move |completion| g.line_through(i, assignment | completion))
}

fn step2_packed(g: &Game, part: &Partition, assignment: usize) -> Vec<SolutionSet> {
    part.mixed_players()
        .into_iter()
        .map(|i| {
            let lines: Vec<LinearFn> = subgame_lines(g, part, assignment, i).collect();
            solve_all_equal(&lines).expect("subgame system is non-empty")
        })
        .collect()
}

fn check_pure_part(part: &Partition, pure_part: &[u8]) -> Result<()> {
    let expected = part.pure_players().len();
    if pure_part.len() != expected {
        return Err(Error::ProfileLength {
            expected,
            found: pure_part.len(),
        });
    }
    if let Some((position, &value)) = pure_part.iter().enumerate().find(|(_, &b)| b > 1) {
        return Err(Error::StrategyBit { position, value });
    }
    Ok(())
}

/// Step 2: Berge subequilibria of the mixed players once `P` plays
/// `pure_part`. One solution set per mixed player, in player order; an
/// `Empty` coordinate means there is no subequilibrium.
pub fn step2_subequilibria(
    g: &Game,
    part: &Partition,
    pure_part: &[u8],
) -> Result<Vec<SolutionSet>> {
    check_partition(g, part)?;
    check_pure_part(part, pure_part)?;
    Ok(step2_packed(g, part, part.pack(pure_part)))
}

fn step3_packed(
    g: &Game,
    part: &Partition,
    assignment: usize,
    sub: &[SolutionSet],
) -> Vec<SolutionSet> {
    let n = g.n();
    part.mixed_players()
        .into_iter()
        .zip(sub)
        .map(|(i, coordinate)| {
            // the other mixed players at their first strategies
            let own = g.line_through(i, assignment);
            debug_assert!(
                subgame_lines(g, part, assignment, i).all(|l| match coordinate {
                    SolutionSet::Empty => true,
                    SolutionSet::Point(v) => l.eval(v) == own.eval(v),
                    SolutionSet::Interval(_) => l == own,
                }),
                "step-2 lines disagree on the subequilibrium set"
            );
            let rivals = (0..1usize << (n - 1)).map(|others| g.line_for(i, others));
            match coordinate {
                SolutionSet::Empty => SolutionSet::Empty,
                SolutionSet::Point(v) => {
                    let value = own.eval(v);
                    let mut rivals = rivals;
                    if rivals.all(|l| l.eval(v) <= value) {
                        coordinate.clone()
                    } else {
                        SolutionSet::Empty
                    }
                }
                SolutionSet::Interval(_) => {
                    let mut acc = coordinate.clone();
                    for rival in rivals {
                        acc = intersect(&acc, &solve_ge(&own, &rival));
                        if acc.is_empty() {
                            break;
                        }
                    }
                    acc
                }
            }
        })
        .collect()
}

/// Step 3: restrict each mixed player's step-2 set to the probabilities at
/// which no pure deviation of *all* other players, pure ones included,
/// beats the subequilibrium payoff.
pub fn step3_refine(
    g: &Game,
    part: &Partition,
    pure_part: &[u8],
    sub: &[SolutionSet],
) -> Result<Vec<SolutionSet>> {
    check_partition(g, part)?;
    check_pure_part(part, pure_part)?;
    let expected = part.mixed_players().len();
    if sub.len() != expected {
        return Err(Error::ProfileLength {
            expected,
            found: sub.len(),
        });
    }
    Ok(step3_packed(g, part, part.pack(pure_part), sub))
}

fn solve_partition(
    g: &Game,
    table: &DisappointmentTable,
    part: &Partition,
) -> (Vec<EquilibriumBox>, PartitionDiagnostic) {
    let candidates = step1_packed(table, part);
    let mut diag = PartitionDiagnostic {
        partition: *part,
        candidates: candidates.len(),
        failed_step2: 0,
        failed_step3: 0,
        boxes: 0,
    };
    let mut boxes = Vec::new();
    for assignment in candidates {
        let sub = step2_packed(g, part, assignment);
        if sub.iter().any(SolutionSet::is_empty) {
            diag.failed_step2 += 1;
            continue;
        }
        let refined = step3_packed(g, part, assignment, &sub);
        let Some(mixed) = refined
            .into_iter()
            .map(PlayerConstraint::from_set)
            .collect::<Option<Vec<_>>>()
        else {
            diag.failed_step3 += 1;
            continue;
        };
        let mut mixed = mixed.into_iter();
        let constraints = (0..g.n())
            .map(|i| {
                if part.is_pure(i) {
                    PlayerConstraint::Pure(u8::from(assignment & player_bit(g.n(), i) != 0))
                } else {
                    mixed.next().expect("one constraint per mixed player")
                }
            })
            .collect();
        boxes.push(EquilibriumBox {
            source: Source::MixedType {
                partition: *part,
                pure_part: part.unpack(assignment),
            },
            constraints,
        });
    }
    diag.boxes = boxes.len();
    (boxes, diag)
}

/// Mixed-type equilibria for a single partition: one box per pure subprofile
/// of `P` that survives all three steps.
pub fn mixed_type_berge(g: &Game, part: &Partition) -> Result<Vec<EquilibriumBox>> {
    check_partition(g, part)?;
    let table = disappointment_matrix(g);
    Ok(solve_partition(g, &table, part).0)
}

/// Every Berge equilibrium: pure ones first, then the completely mixed box,
/// then mixed-type boxes by partition bitmask. Partitions are solved in
/// parallel and merged in order, so the report is deterministic.
pub fn all_berge(g: &Game) -> BergeReport {
    let n = g.n();
    let table = disappointment_matrix(g);

    let pure = pure_berge_from(&table);
    let mut boxes: Vec<EquilibriumBox> = pure
        .iter()
        .map(|p| EquilibriumBox {
            source: Source::Pure,
            constraints: p
                .bits()
                .iter()
                .map(|&b| PlayerConstraint::Pure(b))
                .collect(),
        })
        .collect();

    let (fully_mixed, contradictory_players) = solve_fully_mixed(g);
    boxes.extend(fully_mixed);

    let partitions = enumerate_partitions(n).expect("game has a valid player count");
    let solved: Vec<(Vec<EquilibriumBox>, PartitionDiagnostic)> = partitions
        .par_iter()
        .map(|part| solve_partition(g, &table, part))
        .collect();
    let mut diagnostics = Vec::with_capacity(solved.len());
    for (found, diag) in solved {
        boxes.extend(found);
        diagnostics.push(diag);
    }

    BergeReport {
        n,
        players: (0..n).map(|i| g.player_name(i)).collect(),
        fingerprint: g.fingerprint(),
        boxes,
        diagnostics: Diagnostics {
            pure_equilibria: pure.len(),
            contradictory_players,
            partitions: diagnostics,
        },
    }
}
