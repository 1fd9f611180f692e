//! Command-line surface: one `Cli` root, nine subcommands, and the shared
//! value enums. Every parsed command can be re-rendered as a canonical
//! argument vector that parses back to the identical command.

use std::path::PathBuf;

use clap::{value_parser, Parser, Subcommand, ValueEnum};

use chainsaw_core::closed_form::FormulaMode;
use chainsaw_core::explorer::{Subject, DEFAULT_SLOT_CAP};
use chainsaw_core::ring::RingKind;

fn positive() -> clap::builder::RangedU64ValueParser {
    value_parser!(u64).range(1..)
}

/// Simulator, closed forms, verification sweeps, and the card-trick demo for
/// the chainsaw variant of the Josephus game.
#[derive(Parser, Debug, Clone, PartialEq, Eq)]
#[command(name = "chainsaw", version, about, max_term_width = 100)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format for the payload.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    pub format: FormatArg,

    /// Write the payload to this file; stdout then carries a summary line.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug, Clone, PartialEq, Eq)]
pub enum Command {
    /// Print the surviving soldier's label.
    Survivor {
        /// Number of soldiers in the circle.
        #[arg(long, value_parser = positive())]
        n: u64,
        /// Soldiers hit after each skipped one.
        #[arg(long, value_parser = positive())]
        k: u64,
        /// Lives per soldier.
        #[arg(long, default_value_t = 1, value_parser = positive())]
        lives: u64,
        /// How to compute: formula when one applies, simulation, or automatic.
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        /// Formula variant: reconciled against the simulation, or as printed.
        #[arg(long, value_enum, default_value_t = ModeArg::Reconciled)]
        mode: ModeArg,
        /// Circle data structure for simulation.
        #[arg(long, value_enum, default_value_t = RingArg::Linked)]
        ring: RingArg,
    },

    /// Print the slot-by-slot event stream of one game.
    Simulate {
        #[arg(long, value_parser = positive())]
        n: u64,
        #[arg(long, value_parser = positive())]
        k: u64,
        #[arg(long, default_value_t = 1, value_parser = positive())]
        lives: u64,
        #[arg(long, value_enum, default_value_t = RingArg::Linked)]
        ring: RingArg,
    },

    /// Print the elimination order.
    Order {
        #[arg(long, value_parser = positive())]
        n: u64,
        #[arg(long, value_parser = positive())]
        k: u64,
        #[arg(long, default_value_t = 1, value_parser = positive())]
        lives: u64,
        #[arg(long, value_enum, default_value_t = RingArg::Linked)]
        ring: RingArg,
        /// Run past the winner until the circle is empty (single life only).
        #[arg(long)]
        deplete: bool,
    },

    /// Print when one soldier is eliminated (1-based ordinal, single life).
    ElimTime {
        #[arg(long, value_parser = positive())]
        n: u64,
        #[arg(long, value_parser = positive())]
        k: u64,
        /// Label of the soldier to look up.
        #[arg(long)]
        soldier: u64,
    },

    /// Print the circle at the first moment every remaining soldier has one
    /// life, compared against the closed-form set.
    OneLife {
        #[arg(long, value_parser = positive())]
        n: u64,
        #[arg(long, value_parser = positive())]
        k: u64,
        #[arg(long, default_value_t = 1, value_parser = positive())]
        lives: u64,
        #[arg(long, value_enum, default_value_t = ModeArg::Reconciled)]
        mode: ModeArg,
    },

    /// Sweep a formula against the simulation oracle and report mismatches.
    Verify {
        /// Which claim to check.
        #[arg(long, value_enum)]
        subject: SubjectArg,
        #[arg(long, default_value_t = 1, value_parser = positive())]
        k_min: u64,
        #[arg(long, default_value_t = 6, value_parser = positive())]
        k_max: u64,
        #[arg(long, default_value_t = 1, value_parser = positive())]
        n_min: u64,
        #[arg(long, default_value_t = 200, value_parser = positive())]
        n_max: u64,
        #[arg(long, default_value_t = 1, value_parser = positive())]
        lives_min: u64,
        #[arg(long, default_value_t = 6, value_parser = positive())]
        lives_max: u64,
        /// Only configurations with gcd(n, k+1) = 1.
        #[arg(long)]
        coprime_only: bool,
        /// Ceiling on total simulated slots before the sweep is truncated.
        #[arg(long, default_value_t = DEFAULT_SLOT_CAP, value_parser = positive())]
        slot_cap: u64,
    },

    /// Tabulate one of the open-ended surveys.
    Sweep {
        /// Which survey to run.
        #[arg(long, value_enum)]
        subject: SubjectArg,
        /// Block length for the constant-survivor survey.
        #[arg(long, default_value_t = 4, value_parser = positive())]
        k: u64,
        /// Largest circle size surveyed.
        #[arg(long, default_value_t = 50, value_parser = positive())]
        n_max: u64,
        /// Largest lives count surveyed (constant-survivor).
        #[arg(long, default_value_t = 8, value_parser = positive())]
        lives_max: u64,
        /// Largest block length surveyed (short-circle survey).
        #[arg(long, default_value_t = 25, value_parser = positive())]
        k_max: u64,
        #[arg(long, default_value_t = 1, value_parser = positive())]
        k_min: u64,
        #[arg(long, default_value_t = 1, value_parser = positive())]
        n_min: u64,
        #[arg(long, default_value_t = 1, value_parser = positive())]
        lives_min: u64,
        /// Only configurations with gcd(n, k+1) = 1 (empties the non-coprime survey).
        #[arg(long)]
        coprime_only: bool,
        #[arg(long, default_value_t = DEFAULT_SLOT_CAP, value_parser = positive())]
        slot_cap: u64,
    },

    /// Predict the last cards of the dealing trick on an n-card deck.
    CardTrick {
        /// Deck size.
        #[arg(long, default_value_t = 52, value_parser = positive())]
        cards: u64,
        /// Cards dealt after each card moved to the bottom.
        #[arg(long, default_value_t = 3, value_parser = positive())]
        k: u64,
    },

    /// Time one game on each circle data structure.
    Bench {
        #[arg(long, value_parser = positive())]
        n: u64,
        #[arg(long, value_parser = positive())]
        k: u64,
        #[arg(long, default_value_t = 1, value_parser = positive())]
        lives: u64,
        /// Run to an empty circle instead of stopping at the winner.
        #[arg(long)]
        deplete: bool,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormatArg {
    Text,
    Json,
    Csv,
}

impl FormatArg {
    pub fn as_str(self) -> &'static str {
        match self {
            FormatArg::Text => "text",
            FormatArg::Json => "json",
            FormatArg::Csv => "csv",
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingArg {
    Dense,
    Linked,
    Indexed,
}

impl RingArg {
    pub fn kind(self) -> RingKind {
        match self {
            RingArg::Dense => RingKind::DenseArray,
            RingArg::Linked => RingKind::DoublyLinked,
            RingArg::Indexed => RingKind::OrderStatistic,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            RingArg::Dense => "dense",
            RingArg::Linked => "linked",
            RingArg::Indexed => "indexed",
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum MethodArg {
    Auto,
    Closed,
    Simulate,
}

impl MethodArg {
    pub fn as_str(self) -> &'static str {
        match self {
            MethodArg::Auto => "auto",
            MethodArg::Closed => "closed",
            MethodArg::Simulate => "simulate",
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModeArg {
    Reconciled,
    Paper,
}

impl ModeArg {
    pub fn formula_mode(self) -> FormulaMode {
        match self {
            ModeArg::Reconciled => FormulaMode::Reconciled,
            ModeArg::Paper => FormulaMode::PaperPrinted,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ModeArg::Reconciled => "reconciled",
            ModeArg::Paper => "paper",
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubjectArg {
    Theorem1,
    Theorem2,
    #[value(name = "theorem3-paper")]
    Theorem3Paper,
    #[value(name = "theorem3-reconciled")]
    Theorem3Reconciled,
    Lemma1,
    Lemma2,
    #[value(name = "one-life-paper")]
    OneLifePaper,
    #[value(name = "one-life-reconciled")]
    OneLifeReconciled,
    ConstantSurvivor,
    KGreaterThanN,
    NoncoprimeSurvey,
}

impl SubjectArg {
    pub fn subject(self) -> Subject {
        match self {
            SubjectArg::Theorem1 => Subject::Theorem1,
            SubjectArg::Theorem2 => Subject::Theorem2,
            SubjectArg::Theorem3Paper => Subject::Theorem3PaperPrinted,
            SubjectArg::Theorem3Reconciled => Subject::Theorem3Reconciled,
            SubjectArg::Lemma1 => Subject::Lemma1,
            SubjectArg::Lemma2 => Subject::Lemma2,
            SubjectArg::OneLifePaper => Subject::OneLifeSetPaperPrinted,
            SubjectArg::OneLifeReconciled => Subject::OneLifeSetReconciled,
            SubjectArg::ConstantSurvivor => Subject::ConstantSurvivor,
            SubjectArg::KGreaterThanN => Subject::KGreaterThanN,
            SubjectArg::NoncoprimeSurvey => Subject::NonCoprimeSurvey,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            SubjectArg::Theorem1 => "theorem1",
            SubjectArg::Theorem2 => "theorem2",
            SubjectArg::Theorem3Paper => "theorem3-paper",
            SubjectArg::Theorem3Reconciled => "theorem3-reconciled",
            SubjectArg::Lemma1 => "lemma1",
            SubjectArg::Lemma2 => "lemma2",
            SubjectArg::OneLifePaper => "one-life-paper",
            SubjectArg::OneLifeReconciled => "one-life-reconciled",
            SubjectArg::ConstantSurvivor => "constant-survivor",
            SubjectArg::KGreaterThanN => "k-greater-than-n",
            SubjectArg::NoncoprimeSurvey => "noncoprime-survey",
        }
    }
}

impl Cli {
    /// Renders the full argument vector (binary name first) that parses back
    /// to exactly this command, with every effective value spelled out.
    pub fn canonical_args(&self) -> Vec<String> {
        let mut flags: Vec<(&'static str, String)> = Vec::new();
        let mut switches: Vec<&'static str> = Vec::new();
        let name = match &self.command {
            Command::Survivor { n, k, lives, method, mode, ring } => {
                flags.push(("n", n.to_string()));
                flags.push(("k", k.to_string()));
                flags.push(("lives", lives.to_string()));
                flags.push(("method", method.as_str().into()));
                flags.push(("mode", mode.as_str().into()));
                flags.push(("ring", ring.as_str().into()));
                "survivor"
            }
            Command::Simulate { n, k, lives, ring } => {
                flags.push(("n", n.to_string()));
                flags.push(("k", k.to_string()));
                flags.push(("lives", lives.to_string()));
                flags.push(("ring", ring.as_str().into()));
                "simulate"
            }
            Command::Order { n, k, lives, ring, deplete } => {
                flags.push(("n", n.to_string()));
                flags.push(("k", k.to_string()));
                flags.push(("lives", lives.to_string()));
                flags.push(("ring", ring.as_str().into()));
                if *deplete {
                    switches.push("--deplete");
                }
                "order"
            }
            Command::ElimTime { n, k, soldier } => {
                flags.push(("n", n.to_string()));
                flags.push(("k", k.to_string()));
                flags.push(("soldier", soldier.to_string()));
                "elim-time"
            }
            Command::OneLife { n, k, lives, mode } => {
                flags.push(("n", n.to_string()));
                flags.push(("k", k.to_string()));
                flags.push(("lives", lives.to_string()));
                flags.push(("mode", mode.as_str().into()));
                "one-life"
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
                flags.push(("subject", subject.as_str().into()));
                flags.push(("k-min", k_min.to_string()));
                flags.push(("k-max", k_max.to_string()));
                flags.push(("n-min", n_min.to_string()));
                flags.push(("n-max", n_max.to_string()));
                flags.push(("lives-min", lives_min.to_string()));
                flags.push(("lives-max", lives_max.to_string()));
                flags.push(("slot-cap", slot_cap.to_string()));
                if *coprime_only {
                    switches.push("--coprime-only");
                }
                "verify"
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
                flags.push(("subject", subject.as_str().into()));
                flags.push(("k", k.to_string()));
                flags.push(("n-max", n_max.to_string()));
                flags.push(("lives-max", lives_max.to_string()));
                flags.push(("k-max", k_max.to_string()));
                flags.push(("k-min", k_min.to_string()));
                flags.push(("n-min", n_min.to_string()));
                flags.push(("lives-min", lives_min.to_string()));
                flags.push(("slot-cap", slot_cap.to_string()));
                if *coprime_only {
                    switches.push("--coprime-only");
                }
                "sweep"
            }
            Command::CardTrick { cards, k } => {
                flags.push(("cards", cards.to_string()));
                flags.push(("k", k.to_string()));
                "card-trick"
            }
            Command::Bench { n, k, lives, deplete } => {
                flags.push(("n", n.to_string()));
                flags.push(("k", k.to_string()));
                flags.push(("lives", lives.to_string()));
                if *deplete {
                    switches.push("--deplete");
                }
                "bench"
            }
        };
        let mut args: Vec<String> = vec!["chainsaw".into(), name.into()];
        for (flag, value) in flags {
            args.push(format!("--{flag}"));
            args.push(value);
        }
        args.extend(switches.iter().map(|s| s.to_string()));
        args.push("--format".into());
        args.push(self.format.as_str().into());
        if let Some(path) = &self.out {
            args.push("--out".into());
            args.push(path.display().to_string());
        }
        args
    }
}
