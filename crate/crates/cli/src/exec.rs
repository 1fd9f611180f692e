//! Command execution: runs a parsed [`Cli`] command, renders the payload in
//! the requested format, and maps every outcome to the documented exit codes
//! (0 success, 2 usage or domain error, 3 verification found mismatches,
//! 4 resource cap).

use std::fmt::Write as _;
use std::time::Instant;

use serde_json::json;

use chainsaw_core::closed_form::{
    elim_time_t2, one_life_set, survivor_closed, survivor_feline_with_cap,
};
use chainsaw_core::error::Error;
use chainsaw_core::explorer::{
    self, verify_with_cap, Subject, SweepRange, VerificationReport, DEFAULT_SLOT_CAP,
};
use chainsaw_core::game::{one_life_snapshot, run, run_events, GameConfig, GameEvent, GameMode};

use crate::args::{Cli, Command, FormatArg, MethodArg, ModeArg, SubjectArg};

/// Outcome of executing one command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Execution {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Payload plus the one-line summary used when `--out` redirects the payload.
struct Rendered {
    payload: String,
    summary: String,
    code: i32,
}

/// Runs the command and resolves `--out` redirection.
pub fn execute(cli: Cli) -> Execution {
    match run_command(&cli) {
        Ok(rendered) => match &cli.out {
            Some(path) => match std::fs::write(path, &rendered.payload) {
                Ok(()) => Execution {
                    code: rendered.code,
                    stdout: format!("{} -> wrote {}\n", rendered.summary, path.display()),
                    stderr: String::new(),
                },
                Err(e) => Execution {
                    code: 2,
                    stdout: String::new(),
                    stderr: format!("error: cannot write {}: {e}\n", path.display()),
                },
            },
            None => Execution { code: rendered.code, stdout: rendered.payload, stderr: String::new() },
        },
        Err(e) => Execution {
            code: match e {
                Error::Resource(_) => 4,
                _ => 2,
            },
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn run_command(cli: &Cli) -> Result<Rendered, Error> {
    match &cli.command {
        Command::Survivor { n, k, lives, method, mode, ring } => {
            let survivor = match method {
                MethodArg::Closed => survivor_closed(*n, *k, *lives, mode.formula_mode())?,
                MethodArg::Simulate => {
                    run(GameConfig { n: *n, k: *k, lives: *lives }, GameMode::Survivor, ring.kind())?
                        .survivor
                        .expect("survivor mode always has a winner")
                }
                MethodArg::Auto => match mode {
                    ModeArg::Reconciled => survivor_feline_with_cap(*n, *k, *lives, DEFAULT_SLOT_CAP)?,
                    // As-printed formulas exist only where a formula applies at
                    // all; fall back to the simulation elsewhere.
                    ModeArg::Paper => match survivor_closed(*n, *k, *lives, mode.formula_mode()) {
                        Ok(s) => s,
                        Err(Error::Domain(_)) => {
                            run(GameConfig { n: *n, k: *k, lives: *lives }, GameMode::Survivor, ring.kind())?
                                .survivor
                                .expect("survivor mode always has a winner")
                        }
                        Err(e) => return Err(e),
                    },
                },
            };
            let payload = match cli.format {
                FormatArg::Text => format!("{survivor}\n"),
                FormatArg::Json => pretty(&json!({
                    "n": n, "k": k, "lives": lives,
                    "survivor": survivor,
                    "method": method.as_str(),
                    "mode": mode.as_str(),
                })),
                FormatArg::Csv => format!("n,k,lives,survivor\n{n},{k},{lives},{survivor}\n"),
            };
            Ok(Rendered { payload, summary: format!("survivor {survivor}"), code: 0 })
        }

        Command::Simulate { n, k, lives, ring } => {
            let config = GameConfig { n: *n, k: *k, lives: *lives };
            let (outcome, events) = run_events(config, GameMode::Survivor, ring.kind())?;
            let survivor = outcome.survivor.expect("survivor mode always has a winner");
            let payload = match cli.format {
                FormatArg::Text => {
                    let mut out = String::new();
                    let mut slot = 0u64;
                    for event in &events {
                        match *event {
                            GameEvent::Skip { soldier } => {
                                slot += 1;
                                writeln!(out, "slot {slot}: skip {soldier}").unwrap();
                            }
                            GameEvent::Hit { soldier, remaining_lives } => {
                                slot += 1;
                                let word = if remaining_lives == 1 { "life" } else { "lives" };
                                writeln!(out, "slot {slot}: hit {soldier} ({remaining_lives} {word} left)")
                                    .unwrap();
                            }
                            GameEvent::Eliminate { soldier, ordinal } => {
                                slot += 1;
                                writeln!(out, "slot {slot}: eliminate {soldier} (ordinal {ordinal})")
                                    .unwrap();
                            }
                            GameEvent::Finished { survivor } => {
                                let survivor = survivor.expect("survivor mode");
                                writeln!(out, "finished: survivor {survivor}").unwrap();
                            }
                        }
                    }
                    out
                }
                FormatArg::Json => {
                    let events_json: Vec<serde_json::Value> = events
                        .iter()
                        .map(|event| match *event {
                            GameEvent::Skip { soldier } => json!({"kind": "skip", "soldier": soldier}),
                            GameEvent::Hit { soldier, remaining_lives } => {
                                json!({"kind": "hit", "soldier": soldier, "remaining_lives": remaining_lives})
                            }
                            GameEvent::Eliminate { soldier, ordinal } => {
                                json!({"kind": "eliminate", "soldier": soldier, "ordinal": ordinal})
                            }
                            GameEvent::Finished { survivor } => json!({"kind": "finished", "survivor": survivor}),
                        })
                        .collect();
                    pretty(&json!({
                        "n": n, "k": k, "lives": lives,
                        "ring": ring.as_str(),
                        "survivor": survivor,
                        "events": events_json,
                    }))
                }
                FormatArg::Csv => {
                    let mut out = String::from("slot,event,soldier,value\n");
                    let mut slot = 0u64;
                    for event in &events {
                        match *event {
                            GameEvent::Skip { soldier } => {
                                slot += 1;
                                writeln!(out, "{slot},skip,{soldier},").unwrap();
                            }
                            GameEvent::Hit { soldier, remaining_lives } => {
                                slot += 1;
                                writeln!(out, "{slot},hit,{soldier},{remaining_lives}").unwrap();
                            }
                            GameEvent::Eliminate { soldier, ordinal } => {
                                slot += 1;
                                writeln!(out, "{slot},eliminate,{soldier},{ordinal}").unwrap();
                            }
                            GameEvent::Finished { survivor } => {
                                let survivor = survivor.expect("survivor mode");
                                writeln!(out, ",finished,,{survivor}").unwrap();
                            }
                        }
                    }
                    out
                }
            };
            Ok(Rendered {
                payload,
                summary: format!("{} events, survivor {survivor}", events.len()),
                code: 0,
            })
        }

        Command::Order { n, k, lives, ring, deplete } => {
            let mode = if *deplete {
                if *lives != 1 {
                    return Err(Error::Domain(format!(
                        "--deplete requires --lives 1 (got {lives}): multi-life games end at the winner"
                    )));
                }
                GameMode::Depletion
            } else {
                GameMode::Survivor
            };
            let outcome = run(GameConfig { n: *n, k: *k, lives: *lives }, mode, ring.kind())?;
            let labels: Vec<String> = outcome.order.iter().map(|&(label, _)| label.to_string()).collect();
            let payload = match cli.format {
                FormatArg::Text => format!("{}\n", labels.join(",")),
                FormatArg::Json => pretty(&json!({
                    "n": n, "k": k, "lives": lives,
                    "survivor": outcome.survivor,
                    "order": outcome.order,
                })),
                FormatArg::Csv => {
                    let mut out = String::from("label,ordinal\n");
                    for &(label, ordinal) in &outcome.order {
                        writeln!(out, "{label},{ordinal}").unwrap();
                    }
                    out
                }
            };
            Ok(Rendered {
                payload,
                summary: format!("{} eliminations", outcome.order.len()),
                code: 0,
            })
        }

        Command::ElimTime { n, k, soldier } => {
            let ordinal = elim_time_t2(*n, *k, *soldier)?;
            let payload = match cli.format {
                FormatArg::Text => format!("{ordinal}\n"),
                FormatArg::Json => pretty(&json!({"n": n, "k": k, "soldier": soldier, "ordinal": ordinal})),
                FormatArg::Csv => format!("n,k,soldier,ordinal\n{n},{k},{soldier},{ordinal}\n"),
            };
            Ok(Rendered { payload, summary: format!("eliminated {ordinal}"), code: 0 })
        }

        Command::OneLife { n, k, lives, mode } => {
            let formula_set = one_life_set(*n, *k, *lives, mode.formula_mode())?;
            let snapshot = one_life_snapshot(GameConfig { n: *n, k: *k, lives: *lives })?;
            let oracle_sorted = snapshot.as_ref().map(|s| {
                let mut alive = s.alive.clone();
                alive.sort_unstable();
                alive
            });
            let matches = formula_set == oracle_sorted;
            let payload = match cli.format {
                FormatArg::Text => {
                    let mut out = String::new();
                    match &formula_set {
                        Some(set) => writeln!(out, "formula set: {}", join_labels(set)).unwrap(),
                        None => writeln!(out, "formula set: absent").unwrap(),
                    }
                    match &snapshot {
                        Some(s) => writeln!(
                            out,
                            "oracle circle: {} (cursor {}, after {} slots)",
                            join_labels(&s.alive),
                            s.cursor,
                            s.slots_elapsed
                        )
                        .unwrap(),
                        None =>

                            writeln!(out, "oracle circle: absent (no all-ones round boundary)").unwrap(),
                    }
                    writeln!(out, "matches: {matches}").unwrap();
                    out
                }
                FormatArg::Json => pretty(&json!({
                    "n": n, "k": k, "lives": lives,
                    "mode": mode.as_str(),
                    "formula_set": formula_set,
                    "snapshot": snapshot.as_ref().map(|s| json!({
                        "alive": s.alive,
                        "cursor": s.cursor,
                        "slots_elapsed": s.slots_elapsed,
                    })),
                    "matches": matches,
                })),
                FormatArg::Csv => {
                    let cell = |labels: Option<&Vec<u64>>| match labels {
                        Some(ls) => ls.iter().map(u64::to_string).collect::<Vec<_>>().join(";"),
                        None => "absent".into(),
                    };
                    format!(
                        "source,labels\nformula,{}\noracle,{}\n",
                        cell(formula_set.as_ref()),
                        cell(oracle_sorted.as_ref())
                    )
                }
            };
            Ok(Rendered { payload, summary: format!("matches: {matches}"), code: 0 })
        }

        Command::Verify {
            subject,
            k_min,
            k_max,
            n_min,
            n_max,
            lives_min,
            lives_max,
            coprime_only,
            slot_cap,
        } => {
            let range = SweepRange::new(*k_min, *k_max, *n_min, *n_max, *lives_min, *lives_max, *coprime_only)?;
            let report = verify_with_cap(subject.subject(), range, *slot_cap)?;
            let code = if !report.mismatches.is_empty() {
                3
            } else if !report.complete {
                4
            } else {
                0
            };
            let payload = match cli.format {
                FormatArg::Text => report_text(&report, *slot_cap),
                FormatArg::Json => report.to_json() + "\n",
                FormatArg::Csv => report.to_csv(),
            };
            Ok(Rendered { payload, summary: report_summary(&report), code })
        }

        Command::Sweep {
            subject,
            k,
            n_max,
            lives_max,
            k_max,
            k_min,
            n_min,
            lives_min,
            coprime_only,
            slot_cap,
        } => {
            let rendered = match subject {
                SubjectArg::ConstantSurvivor => {
                    let rows = explorer::sweep_constant_survivor_with_cap(*k, *n_max, *lives_max, *slot_cap)?;
                    let text = if rows.is_empty() {
                        "(no rows)\n".to_string()
                    } else {
                        rows.iter().fold(String::new(), |mut out, r| {
                            writeln!(out, "n={} survivor={}", r.n, r.survivor).unwrap();
                            out
                        })
                    };
                    let summary = format!("{} constant-survivor rows", rows.len());
                    match cli.format {
                        FormatArg::Text => Rendered { payload: text, summary, code: 0 },
                        FormatArg::Json => Rendered {
                            payload: pretty(&json!({"subject": Subject::ConstantSurvivor, "rows": rows})),
                            summary,
                            code: 0,
                        },
                        FormatArg::Csv => Rendered {
                            payload: explorer::constant_survivor_csv(&rows),
                            summary,
                            code: 0,
                        },
                    }
                }
                SubjectArg::KGreaterThanN => {
                    let rows = explorer::survey_k_greater_than_n_with_cap(*k_max, *n_max, *slot_cap)?;
                    let text = if rows.is_empty() {
                        "(no rows)\n".to_string()
                    } else {
                        rows.iter().fold(String::new(), |mut out, r| {
                            writeln!(out, "n={} k={} survivor={}", r.n, r.k, r.survivor).unwrap();
                            out
                        })
                    };
                    let summary = format!("{} short-circle rows", rows.len());
                    match cli.format {
                        FormatArg::Text => Rendered { payload: text, summary, code: 0 },
                        FormatArg::Json => Rendered {
                            payload: pretty(&json!({"subject": Subject::KGreaterThanN, "rows": rows})),
                            summary,
                            code: 0,
                        },
                        FormatArg::Csv => Rendered { payload: explorer::k_greater_csv(&rows), summary, code: 0 },
                    }
                }
                SubjectArg::NoncoprimeSurvey => {
                    let range = SweepRange::new(
                        *k_min,
                        *k_max,
                        *n_min,
                        *n_max,
                        *lives_min,
                        *lives_max,
                        *coprime_only,
                    )?;
                    let rows = explorer::survey_noncoprime_with_cap(range, *slot_cap)?;
                    let text = if rows.is_empty() {
                        "(no rows)\n".to_string()
                    } else {
                        rows.iter().fold(String::new(), |mut out, r| {
                            let mark = match r.lemma1_holds {
                                None => "-",
                                Some(true) => "holds",
                                Some(false) => "fails",
                            };
                            writeln!(
                                out,
                                "n={} k={} lives={} survivor={} scaling={mark}",
                                r.n, r.k, r.lives, r.survivor
                            )
                            .unwrap();
                            out
                        })
                    };
                    let summary = format!("{} non-coprime rows", rows.len());
                    match cli.format {
                        FormatArg::Text => Rendered { payload: text, summary, code: 0 },
                        FormatArg::Json => Rendered {
                            payload: pretty(&json!({"subject": Subject::NonCoprimeSurvey, "rows": rows})),
                            summary,
                            code: 0,
                        },
                        FormatArg::Csv => Rendered { payload: explorer::noncoprime_csv(&rows), summary, code: 0 },
                    }
                }
                other => {
                    return Err(Error::Domain(format!(
                        "subject {} is a formula check; use `verify` for it",
                        other.as_str()
                    )))
                }
            };
            Ok(rendered)
        }

        Command::CardTrick { cards, k } => {
            let deal: Vec<(u64, u64)> = (0..*cards)
                .map(|card| Ok((card, elim_time_t2(*cards, *k, card)?)))
                .collect::<Result<_, Error>>()?;
            let mut last: Vec<(u64, u64)> = deal.iter().copied().filter(|&(_, t)| t + 4 > *cards).collect();
            last.sort_by_key(|&(_, t)| t);
            let labels: Vec<String> = last.iter().map(|&(card, _)| card.to_string()).collect();
            let positions: Vec<String> = last.iter().map(|&(card, _)| english_ordinal(card + 1)).collect();
            let head = match last.len() {
                4 => "last four in order".to_string(),
                m => format!("last {m} in order"),
            };
            let headline = format!(
                "{head}: {} (positions {} cards as dealt)",
                labels.join(", "),
                positions.join(", ")
            );
            let payload = match cli.format {
                FormatArg::Text => {
                    let mut out = format!("{headline}\n");
                    for &(card, t) in &deal {
                        writeln!(out, "card {card}: dealt {}", english_ordinal(t)).unwrap();
                    }
                    out
                }
                FormatArg::Json => pretty(&json!({
                    "cards": cards, "k": k,
                    "last_four": last.iter().map(|&(card, _)| card).collect::<Vec<_>>(),
                    "deal": deal,
                })),
                FormatArg::Csv => {
                    let mut out = String::from("card,ordinal\n");
                    for &(card, t) in &deal {
                        writeln!(out, "{card},{t}").unwrap();
                    }
                    out
                }
            };
            Ok(Rendered { payload, summary: headline, code: 0 })
        }

        Command::Bench { n, k, lives, deplete } => {
            let mode = if *deplete {
                if *lives != 1 {
                    return Err(Error::Domain(format!(
                        "--deplete requires --lives 1 (got {lives}): multi-life games end at the winner"
                    )));
                }
                GameMode::Depletion
            } else {
                GameMode::Survivor
            };
            let config = GameConfig { n: *n, k: *k, lives: *lives };
            let mut timings: Vec<(&'static str, u128, Option<u64>)> = Vec::new();
            for ring in [crate::args::RingArg::Dense, crate::args::RingArg::Linked, crate::args::RingArg::Indexed] {
                let start = Instant::now();
                let outcome = run(config, mode, ring.kind())?;
                timings.push((ring.as_str(), start.elapsed().as_nanos(), outcome.survivor));
            }
            let survivor = timings[0].2;
            let payload = match cli.format {
                FormatArg::Text => {
                    let mut out = String::new();
                    for &(ring, nanos, _) in &timings {
                        writeln!(out, "{ring}: {:?}", std::time::Duration::from_nanos(nanos as u64)).unwrap();
                    }
                    match survivor {
                        Some(s) => writeln!(out, "survivor: {s}").unwrap(),
                        None => writeln!(out, "eliminated: {n}").unwrap(),
                    }
                    out
                }
                FormatArg::Json => pretty(&json!({
                    "n": n, "k": k, "lives": lives,
                    "mode": if *deplete { "depletion" } else { "survivor" },
                    "survivor": survivor,
                    "timings": timings
                        .iter()
                        .map(|&(ring, nanos, _)| json!({"ring": ring, "nanos": nanos as u64}))
                        .collect::<Vec<_>>(),
                })),
                FormatArg::Csv => {
                    let mut out = String::from("ring,nanos\n");
                    for &(ring, nanos, _) in &timings {
                        writeln!(out, "{ring},{nanos}").unwrap();
                    }
                    out
                }
            };
            let fastest = timings.iter().min_by_key(|&&(_, nanos, _)| nanos).unwrap();
            Ok(Rendered {
                payload,
                summary: format!("fastest {} at {:?}", fastest.0, std::time::Duration::from_nanos(fastest.1 as u64)),
                code: 0,
            })
        }
    }
}

fn pretty(value: &serde_json::Value) -> String {
    serde_json::to_string_pretty(value).expect("JSON rendering cannot fail") + "\n"
}

fn join_labels(labels: &[u64]) -> String {
    labels.iter().map(u64::to_string).collect::<Vec<_>>().join(", ")
}

/// 1 → "1st", 2 → "2nd", 13 → "13th", 21 → "21st".
fn english_ordinal(value: u64) -> String {
    let suffix = match (value % 10, value % 100) {
        (_, 11..=13) => "th",
        (1, _) => "st",
        (2, _) => "nd",
        (3, _) => "rd",
        _ => "th",
    };
    format!("{value}{suffix}")
}

fn report_text(report: &VerificationReport, slot_cap: u64) -> String {
    let mut out = String::new();
    writeln!(out, "subject: {}", report.subject).unwrap();
    writeln!(
        out,
        "range: k {}..{}, n {}..{}, lives {}..{}, coprime-only {}",
        report.range.k_min,
        report.range.k_max,
        report.range.n_min,
        report.range.n_max,
        report.range.lives_min,
        report.range.lives_max,
        report.range.coprime_only
    )
    .unwrap();
    if report.complete {
        writeln!(out, "checked: {} configurations (complete)", report.checked).unwrap();
    } else {
        writeln!(
            out,
            "checked: {} configurations (INCOMPLETE: slot cap {slot_cap} reached)",
            report.checked
        )
        .unwrap();
    }
    writeln!(out, "mismatches: {}", report.mismatches.len()).unwrap();
    for m in &report.mismatches {
        match m.soldier {
            Some(soldier) => writeln!(
                out,
                "  k={} n={} lives={} soldier={soldier}: formula {}, oracle {}",
                m.k, m.n, m.lives, m.expected, m.oracle
            )
            .unwrap(),
            None => writeln!(
                out,
                "  k={} n={} lives={}: formula {}, oracle {}",
                m.k, m.n, m.lives, m.expected, m.oracle
            )
            .unwrap(),
        }
    }
    out
}

fn report_summary(report: &VerificationReport) -> String {
    format!(
        "{}: checked {}, {}, {} mismatches",
        report.subject,
        report.checked,
        if report.complete { "complete" } else { "incomplete" },
        report.mismatches.len()
    )
}
