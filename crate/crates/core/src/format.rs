//! Game files, report serialization and the matrix view of per-profile data.
//!
//! A game file is JSON with keys `players` (optional list of names), `n`, and
//! `payoffs`: one row of `n` numbers per pure profile, rows in profile-index
//! order (player 0 most significant, bit 0 = first strategy). Numbers are
//! strings holding an integer, a decimal or an `a/b` fraction; plain JSON
//! integers are accepted too.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::game::{Game, DEFAULT_MAX_PLAYERS, HARD_MAX_PLAYERS};
use crate::mixed::{BergeReport, EquilibriumBox, PartitionOutcome, PlayerConstraint, Source};
use crate::pure::DisappointmentTable;
use crate::rational::{parse_rational, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReportFormat {
    #[default]
    Text,
    Json,
}

/// Parses a game file with the default player cap.
pub fn parse_game(text: &str) -> Result<Game> {
    parse_game_with_limit(text, DEFAULT_MAX_PLAYERS)
}

pub fn parse_game_with_limit(text: &str, max_players: usize) -> Result<Game> {
    let doc: Value = serde_json::from_str(text).map_err(|e| {
        Error::parse(
            format!("line {} column {}", e.line(), e.column()),
            format!("malformed document: {e}"),
        )
    })?;
    let Value::Object(fields) = doc else {
        return Err(Error::parse("document", "expected a JSON object"));
    };
    if let Some(key) = fields
        .keys()
        .find(|k| !matches!(k.as_str(), "players" | "n" | "payoffs"))
    {
        return Err(Error::parse(key.clone(), "unknown key"));
    }

    let n = match fields.get("n") {
        None => return Err(Error::parse("n", "missing player count")),
        Some(v) => v.as_u64().ok_or_else(|| {
            Error::parse("n", format!("expected a non-negative integer, found {v}"))
        })?,
    };
    let max = max_players.min(HARD_MAX_PLAYERS);
    if n < 2 || n > max as u64 {
        return Err(Error::parse(
            "n",
            format!("player count {n} outside the supported range [2, {max}]"),
        ));
    }
    let n = n as usize;

    let players = match fields.get("players") {
        None | Some(Value::Null) => None,
        Some(Value::Array(names)) => {
            if names.len() != n {
                return Err(Error::parse(
                    "players",
                    format!("expected {n} names, found {}", names.len()),
                ));
            }
            let names = names
                .iter()
                .enumerate()
                .map(|(i, v)| match v.as_str() {
                    Some(s) if !s.is_empty() => Ok(s.to_string()),
                    _ => Err(Error::parse(
                        format!("players[{i}]"),
                        "expected a non-empty string",
                    )),
                })
                .collect::<Result<Vec<_>>>()?;
            Some(names)
        }
        Some(_) => return Err(Error::parse("players", "expected a list of names")),
    };

    let Some(Value::Array(rows)) = fields.get("payoffs") else {
        return Err(Error::parse("payoffs", "missing or not a list"));
    };
    let expected = 1usize << n;
    if rows.len() != expected {
        return Err(Error::parse(
            "payoffs",
            format!("expected {expected} profiles, found {}", rows.len()),
        ));
    }
    let mut table = Vec::with_capacity(expected);
    for (k, row) in rows.iter().enumerate() {
        let Value::Array(entries) = row else {
            return Err(Error::parse(
                format!("payoffs[{k}]"),
                "expected a list of payoffs",
            ));
        };
        if entries.len() != n {
            return Err(Error::parse(
                format!("payoffs[{k}]"),
                format!("expected {n} payoffs, found {}", entries.len()),
            ));
        }
        let parsed = entries
            .iter()
            .enumerate()
            .map(|(i, v)| parse_entry(v).map_err(|m| Error::parse(format!("payoffs[{k}][{i}]"), m)))
            .collect::<Result<Vec<_>>>()?;
        table.push(parsed);
    }

    let game = Game::with_max_players(n, table, max)?;
    match players {
        Some(names) => game.with_players(names),
        None => Ok(game),
    }
}

fn parse_entry(value: &Value) -> std::result::Result<Rational, String> {
    match value {
        Value::String(s) => parse_rational(s).map_err(|e| format!("non-numeric entry: {e}")),
        Value::Number(num) if num.is_i64() || num.is_u64() => parse_rational(&num.to_string()),
        Value::Number(num) => Err(format!(
            "JSON number {num} is not exact; write it as a string such as \"{num}\""
        )),
        other => Err(format!("non-numeric entry {other}")),
    }
}

/// Serializes a game in the file format, one profile row per line.
pub fn emit_game(g: &Game) -> String {
    let quote = |s: &str| serde_json::to_string(s).expect("strings serialize");
    let mut out = String::from("{\n");
    if let Some(names) = g.players() {
        let names: Vec<String> = names.iter().map(|s| quote(s)).collect();
        let _ = writeln!(out, "  \"players\": [{}],", names.join(", "));
    }
    let _ = writeln!(out, "  \"n\": {},", g.n());
    out.push_str("  \"payoffs\": [\n");
    let rows: Vec<String> = g
        .rows()
        .map(|row| {
            let cells: Vec<String> = row.iter().map(|v| quote(&v.to_string())).collect();
            format!("    [{}]", cells.join(", "))
        })
        .collect();
    out.push_str(&rows.join(",\n"));
    out.push_str("\n  ]\n}\n");
    out
}

/// Names of the probability variables: `p, q, r, ...` up to eleven
/// players, `x1, x2, ...` beyond that.
pub fn variable_names(n: usize) -> Vec<String> {
    const LETTERS: &str = "pqrstuvwxyz";
    if n <= LETTERS.len() {
        LETTERS.chars().take(n).map(String::from).collect()
    } else {
        (1..=n).map(|i| format!("x{i}")).collect()
    }
}

fn constraint_text(variable: &str, c: &PlayerConstraint) -> String {
    match c {
        PlayerConstraint::Interval(iv) => format!("{variable} ∈ {iv}"),
        other => format!("{variable}={other}"),
    }
}

fn source_text(report: &BergeReport, b: &EquilibriumBox) -> String {
    match &b.source {
        Source::Pure => "pure".to_string(),
        Source::FullyMixed => "fully mixed".to_string(),
        Source::MixedType { partition, .. } => {
            format!("mixed type {}", partition.label(&report.players))
        }
    }
}

fn pure_strategies(report: &BergeReport, b: &EquilibriumBox) -> Vec<String> {
    b.constraints
        .iter()
        .enumerate()
        .filter_map(|(i, c)| match c {
            PlayerConstraint::Pure(bit) => Some(format!("{}{}", report.players[i], bit + 1)),
            _ => None,
        })
        .collect()
}

fn outcome_text(outcome: PartitionOutcome) -> String {
    match outcome {
        PartitionOutcome::EliminatedAtStep1 => "eliminated at step 1".into(),
        PartitionOutcome::EliminatedAtStep2 => "eliminated at step 2".into(),
        PartitionOutcome::EliminatedAtStep3 => "eliminated at step 3".into(),
        PartitionOutcome::Produced(k) => format!("{k} box(es)"),
    }
}

pub fn emit_report(report: &BergeReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Text => emit_text(report),
        ReportFormat::Json => {
            let mut out =
                serde_json::to_string_pretty(&ReportDoc::new(report)).expect("report serializes");
            out.push('\n');
            out
        }
    }
}

fn emit_text(report: &BergeReport) -> String {
    let vars = variable_names(report.n);
    let mut out = String::new();
    let _ = writeln!(out, "players: {}", report.players.join(", "));
    let _ = writeln!(out, "fingerprint: {}", report.fingerprint);
    let _ = writeln!(out, "Berge equilibrium sets: {}", report.boxes.len());
    if report.boxes.is_empty() {
        out.push_str("no Berge equilibria\n");
    }
    for (k, b) in report.boxes.iter().enumerate() {
        let coords: Vec<String> = b
            .constraints
            .iter()
            .zip(&vars)
            .map(|(c, v)| constraint_text(v, c))
            .collect();
        let _ = writeln!(
            out,
            "[{}] {}: {}",
            k + 1,
            source_text(report, b),
            coords.join(", ")
        );
        let pure = pure_strategies(report, b);
        if !pure.is_empty() {
            let _ = writeln!(out, "    pure strategies: {}", pure.join(" "));
        }
    }

    let d = &report.diagnostics;
    out.push_str("\nsearch summary:\n");
    let _ = writeln!(
        out,
        "  pure: {} profile(s) with zero disappointment",
        d.pure_equilibria
    );
    if d.contradictory_players.is_empty() {
        out.push_str("  fully mixed: solved\n");
    } else {
        let names: Vec<&str> = d
            .contradictory_players
            .iter()
            .map(|&i| report.players[i].as_str())
            .collect();
        let _ = writeln!(
            out,
            "  fully mixed: no solution in (0, 1) for {}",
            names.join(", ")
        );
    }
    for p in &d.partitions {
        let _ = writeln!(
            out,
            "  {}: {} candidate(s) after step 1, {}",
            p.partition.label(&report.players),
            p.candidates,
            outcome_text(p.outcome())
        );
    }
    out
}

#[derive(Serialize)]
struct ReportDoc {
    n: usize,
    players: Vec<String>,
    variables: Vec<String>,
    fingerprint: String,
    equilibrium_sets: Vec<BoxDoc>,
    diagnostics: DiagnosticsDoc,
}

#[derive(Serialize)]
struct BoxDoc {
    source: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    partition: Option<PartitionDoc>,
    summary: String,
    constraints: Vec<ConstraintDoc>,
}

#[derive(Serialize)]
struct PartitionDoc {
    label: String,
    pure: Vec<String>,
    mixed: Vec<String>,
}

#[derive(Serialize)]
struct ConstraintDoc {
    player: String,
    variable: String,
    kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    strategy: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lo: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lo_closed: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    hi: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    hi_closed: Option<bool>,
    text: String,
}

#[derive(Serialize)]
struct DiagnosticsDoc {
    pure_equilibria: usize,
    fully_mixed_contradictory: Vec<String>,
    partitions: Vec<PartitionDiagnosticDoc>,
}

#[derive(Serialize)]
struct PartitionDiagnosticDoc {
    label: String,
    candidates: usize,
    failed_step2: usize,
    failed_step3: usize,
    boxes: usize,
    outcome: String,
}

impl ReportDoc {
    fn new(report: &BergeReport) -> Self {
        let vars = variable_names(report.n);
        let names = |players: Vec<usize>| -> Vec<String> {
            players
                .into_iter()
                .map(|i| report.players[i].clone())
                .collect()
        };
        let boxes = report
            .boxes
            .iter()
            .map(|b| {
                let (source, partition) = match &b.source {
                    Source::Pure => ("pure", None),
                    Source::FullyMixed => ("fully_mixed", None),
                    Source::MixedType { partition, .. } => (
                        "mixed_type",
                        Some(PartitionDoc {
                            label: partition.label(&report.players),
                            pure: names(partition.pure_players()),
                            mixed: names(partition.mixed_players()),
                        }),
                    ),
                };
                let constraints: Vec<ConstraintDoc> = b
                    .constraints
                    .iter()
                    .enumerate()
                    .map(|(i, c)| constraint_doc(&report.players[i], &vars[i], c))
                    .collect();
                let summary = constraints
                    .iter()
                    .map(|c| c.text.clone())
                    .collect::<Vec<_>>()
                    .join(", ");
                BoxDoc {
                    source,
                    partition,
                    summary,
                    constraints,
                }
            })
            .collect();
        let d = &report.diagnostics;
        ReportDoc {
            n: report.n,
            players: report.players.clone(),
            variables: vars,
            fingerprint: report.fingerprint.clone(),
            equilibrium_sets: boxes,
            diagnostics: DiagnosticsDoc {
                pure_equilibria: d.pure_equilibria,
                fully_mixed_contradictory: names(d.contradictory_players.clone()),
                partitions: d
                    .partitions
                    .iter()
                    .map(|p| PartitionDiagnosticDoc {
                        label: p.partition.label(&report.players),
                        candidates: p.candidates,
                        failed_step2: p.failed_step2,
                        failed_step3: p.failed_step3,
                        boxes: p.boxes,
                        outcome: outcome_text(p.outcome()),
                    })
                    .collect(),
            },
        }
    }
}

fn constraint_doc(player: &str, variable: &str, c: &PlayerConstraint) -> ConstraintDoc {
    let mut doc = ConstraintDoc {
        player: player.to_string(),
        variable: variable.to_string(),
        kind: "",
        strategy: None,
        value: None,
        lo: None,
        lo_closed: None,
        hi: None,
        hi_closed: None,
        text: constraint_text(variable, c),
    };
    match c {
        PlayerConstraint::Pure(bit) => {
            doc.kind = "pure";
            doc.strategy = Some(format!("{player}{}", bit + 1));
            doc.value = Some(c.to_string());
        }
        PlayerConstraint::Point(v) => {
            doc.kind = "point";
            doc.value = Some(v.to_string());
        }
        PlayerConstraint::Interval(iv) => {
            doc.kind = "interval";
            doc.lo = Some(iv.lo().to_string());
            doc.lo_closed = Some(iv.lo_closed());
            doc.hi = Some(iv.hi().to_string());
            doc.hi_closed = Some(iv.hi_closed());
        }
    }
    doc
}

/// Lays out per-profile cells as row-player by column-player matrices, one
/// matrix per pure choice of the remaining players (`C1:`, `C2:`, ...).
pub fn render_matrices(g: &Game, cell: impl Fn(usize) -> String) -> String {
    let n = g.n();
    let strata = 1usize << (n - 2);
    let row_labels = [g.strategy_label(0, 0), g.strategy_label(0, 1)];
    let col_labels = [g.strategy_label(1, 0), g.strategy_label(1, 1)];
    let mut out = String::new();
    for stratum in 0..strata {
        let cells: Vec<[String; 2]> = (0..2)
            .map(|r| [0, 1].map(|c| cell((r << (n - 1)) | (c << (n - 2)) | stratum)))
            .collect();
        let label_w = row_labels
            .iter()
            .map(|s| s.chars().count())
            .max()
            .unwrap_or(0);
        let col_w: Vec<usize> = (0..2)
            .map(|c| {
                cells
                    .iter()
                    .map(|row| row[c].chars().count())
                    .chain(std::iter::once(col_labels[c].chars().count()))
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        if n > 2 {
            let header: Vec<String> = (2..n)
                .map(|j| {
                    let bit = (stratum >> (n - 1 - j)) & 1;
                    g.strategy_label(j, bit as u8)
                })
                .collect();
            if stratum > 0 {
                out.push('\n');
            }
            let _ = writeln!(out, "{}:", header.join(" "));
        }
        let _ = writeln!(
            out,
            "{:label_w$}  {:>w0$}  {:>w1$}",
            "",
            col_labels[0],
            col_labels[1],
            w0 = col_w[0],
            w1 = col_w[1]
        );
        for (r, row) in cells.iter().enumerate() {
            let _ = writeln!(
                out,
                "{:label_w$}  {:>w0$}  {:>w1$}",
                row_labels[r],
                row[0],
                row[1],
                w0 = col_w[0],
                w1 = col_w[1]
            );
        }
    }
    out
}

fn tuple(values: &[Rational]) -> String {
    let parts: Vec<String> = values.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

/// Disappointment table in the matrix layout of [`render_matrices`].
pub fn render_disappointment(g: &Game, table: &DisappointmentTable) -> String {
    render_matrices(g, |k| tuple(table.row(k)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::mixed::all_berge;
    use crate::pure::disappointment_matrix;
    use crate::rational::ratio;

    const SMALL: &str = r#"{"n": 2, "payoffs": [["3","3"],["0","5"],["5","0"],["1","1"]]}"#;

    fn parse_err(text: &str) -> (String, String) {
        match parse_game(text) {
            Err(Error::Parse { location, message }) => (location, message),
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn parses_minimal_file() {
        let g = parse_game(SMALL).unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.players(), None);
        assert_eq!(g.rows().nth(1).unwrap()[1], crate::rational::int(5));
    }

    #[test]
    fn parses_fractions_decimals_and_integers() {
        let text = r#"{"n": 2, "payoffs": [["3/5", "0.25"], [1, -2], ["0","0"], ["0","0"]]}"#;
        let g = parse_game(text).unwrap();
        let row: Vec<Rational> = g.rows().next().unwrap().to_vec();
        assert_eq!(row, vec![ratio(3, 5), ratio(1, 4)]);
        assert_eq!(g.rows().nth(1).unwrap()[1], crate::rational::int(-2));
    }

    #[test]
    fn diagnostics_name_the_location() {
        let seven = r#"{"n": 3, "payoffs": [["0","0","0"],["0","0","0"],["0","0","0"],["0","0","0"],["0","0","0"],["0","0","0"],["0","0","0"]]}"#;
        let (loc, msg) = parse_err(seven);
        assert_eq!(loc, "payoffs");
        assert!(msg.contains("expected 8 profiles"), "{msg}");

        let (loc, msg) =
            parse_err(r#"{"n": 2, "payoffs": [["a","0"],["0","0"],["0","0"],["0","0"]]}"#);
        assert_eq!(loc, "payoffs[0][0]");
        assert!(msg.contains("non-numeric"), "{msg}");

        let (loc, _) = parse_err(r#"{"n": 2, "payoffs": [["0"],["0","0"],["0","0"],["0","0"]]}"#);
        assert_eq!(loc, "payoffs[0]");

        let (loc, _) =
            parse_err(r#"{"n": 2, "payoffs": [[0.5,"0"],["0","0"],["0","0"],["0","0"]]}"#);
        assert_eq!(loc, "payoffs[0][0]");

        let (loc, msg) = parse_err(r#"{"n": 1, "payoffs": [["0"],["0"]]}"#);
        assert_eq!(loc, "n");
        assert!(msg.contains("outside"), "{msg}");

        let (loc, msg) = parse_err("{\"n\": 2,");
        assert!(loc.starts_with("line"), "{loc}");
        assert!(msg.contains("malformed"), "{msg}");

        let (loc, _) = parse_err(r#"{"n": 2, "players": ["a"], "payoffs": []}"#);
        assert_eq!(loc, "players");

        let (loc, msg) = parse_err(r#"{"n": 2, "payof": []}"#);
        assert_eq!(loc, "payof");
        assert_eq!(msg, "unknown key");
    }

    #[test]
    fn player_cap_is_configurable() {
        let g = fixtures::unique_mixed();
        let text = emit_game(&g);
        assert!(parse_game_with_limit(&text, 2).is_err());
        assert!(parse_game_with_limit(&text, 3).is_ok());
    }

    #[test]
    fn emitted_game_reparses_identically() {
        for g in [
            fixtures::no_influence(),
            fixtures::unique_mixed(),
            fixtures::sportsmen_trainer(),
        ] {
            assert_eq!(parse_game(&emit_game(&g)).unwrap(), g);
        }
        let g = parse_game(SMALL).unwrap();
        assert_eq!(parse_game(&emit_game(&g)).unwrap(), g);
    }

    #[test]
    fn text_report_examples() {
        let text = emit_report(&all_berge(&fixtures::no_influence()), ReportFormat::Text);
        assert!(
            text.contains("Berge equilibrium sets: 0\nno Berge equilibria\n"),
            "{text}"
        );
        assert!(
            text.contains("B–AC: 0 candidate(s) after step 1, eliminated at step 1"),
            "{text}"
        );

        let text = emit_report(
            &all_berge(&fixtures::sportsmen_trainer()),
            ReportFormat::Text,
        );
        assert!(text.contains("[1] pure: p=1, q=1, r=1\n"), "{text}");
        assert!(text.contains("FT–S: p=1, q ∈ [1/2, 1), r=1\n"), "{text}");
        assert!(text.contains("ST–F: p ∈ [1/2, 1), q=1, r=1\n"), "{text}");
        assert!(
            text.contains("T–FS: p ∈ [1/2, 1), q ∈ [1/2, 1), r=1\n"),
            "{text}"
        );
        assert!(text.contains("pure strategies: F1 T1"), "{text}");

        let text = emit_report(&all_berge(&fixtures::unique_mixed()), ReportFormat::Text);
        assert!(
            text.contains("fully mixed: p=1/2, q=1/3, r=3/5\n"),
            "{text}"
        );
    }

    #[test]
    fn json_report_uses_exact_strings() {
        let json = emit_report(
            &all_berge(&fixtures::sportsmen_trainer()),
            ReportFormat::Json,
        );
        let doc: Value = serde_json::from_str(&json).unwrap();
        let sets = doc["equilibrium_sets"].as_array().unwrap();
        assert_eq!(sets.len(), 4);
        assert_eq!(sets[3]["partition"]["label"], "FT–S");
        assert_eq!(sets[3]["summary"], "p=1, q ∈ [1/2, 1), r=1");
        let q = &sets[3]["constraints"][1];
        assert_eq!(q["kind"], "interval");
        assert_eq!(q["lo"], "1/2");
        assert_eq!(q["lo_closed"], true);
        assert_eq!(q["hi_closed"], false);
        assert_eq!(sets[0]["constraints"][0]["strategy"], "F1");
    }

    #[test]
    fn disappointment_view_matches_table_layout() {
        let g = fixtures::no_influence();
        let view = render_disappointment(&g, &disappointment_matrix(&g));
        let expected = "\
C1:
         B1       B2
A1  (0,1,2)  (1,1,1)
A2  (0,2,1)  (1,2,0)

C2:
         B1       B2
A1  (1,0,2)  (2,0,1)
A2  (1,1,1)  (2,1,0)
";
        assert_eq!(view, expected);
    }

    #[test]
    fn two_player_view_has_no_header() {
        let g = parse_game(SMALL).unwrap();
        let view = render_matrices(&g, |k| tuple(g.rows().nth(k).unwrap()));
        assert_eq!(
            view,
            "       B1     B2\nA1  (3,3)  (0,5)\nA2  (5,0)  (1,1)\n"
        );
    }

    #[test]
    fn variable_naming() {
        assert_eq!(variable_names(3), vec!["p", "q", "r"]);
        assert_eq!(variable_names(12)[11], "x12");
    }
}
