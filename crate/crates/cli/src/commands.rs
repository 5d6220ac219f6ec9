use anyhow::Result;
use serde_json::json;

use berger_core::bifurcation::MorsePiece;
use berger_core::numerics::rational::{decimals_for, format_fixed, parse_rational};
use berger_core::{
    classify, degeneracy_values, diagram, enumerate_spectrum_below, lambda1, lambda1_multiplicity, morse_index,
    morse_profile, Classification, Enclosure, Family, FiberScale, Rational, Surd, TRange, VerificationReport,
};

use crate::emit::{envelope, Block, Output, Table};

/// Decimal rendering shared by every command.
pub struct Fmt {
    pub decimals: usize,
}

impl Fmt {
    pub fn new(precision: &Rational) -> Self {
        Fmt {
            decimals: decimals_for(precision),
        }
    }

    pub fn rat(&self, x: &Rational) -> String {
        format_fixed(x, self.decimals)
    }

    pub fn surd(&self, x: &Surd) -> String {
        x.to_fixed(self.decimals)
    }

    pub fn enclosure(&self, x: &Enclosure) -> String {
        self.rat(&x.mid())
    }
}

pub fn spectrum(family: &Family, scales: &[(Rational, FiberScale)], cutoff: &str, fmt: &Fmt) -> Result<Output> {
    let cutoff = parse_rational(cutoff)?;
    let mut table = Table::new(["t", "k", "j", "value", "status", "multiplicity"]);
    let mut slices = Vec::new();
    for (t, scale) in scales {
        let slice = enumerate_spectrum_below(family, scale, &cutoff)?;
        let mut entries = Vec::new();
        for e in &slice.entries {
            let b = e.branch;
            table.push(vec![
                fmt.rat(t),
                b.k.to_string(),
                b.j.to_string(),
                fmt.surd(&e.value),
                b.status.to_string(),
                b.multiplicity.to_string(),
            ]);
            entries.push(json!({
                "k": b.k,
                "j": b.j,
                "value": e.value,
                "status": b.status,
                "multiplicity": b.multiplicity.known(),
            }));
        }
        slices.push(json!({
            "t": t.to_string(),
            "k_max": slice.k_max_used,
            "entries": entries,
        }));
    }
    Ok(Output {
        table,
        json: envelope(
            "spectrum",
            json!({ "family": family, "cutoff": cutoff.to_string(), "slices": slices }),
        ),
    })
}

pub fn lambda1_table(family: &Family, scales: &[(Rational, FiberScale)], fmt: &Fmt) -> Result<Output> {
    let mut table = Table::new(["t", "lambda1", "multiplicity"]);
    let mut rows = Vec::new();
    for (t, scale) in scales {
        let value = lambda1(family, scale)?;
        let mult = lambda1_multiplicity(family, scale);
        table.push(vec![fmt.rat(t), fmt.surd(&value), mult.to_string()]);
        rows.push(json!({ "t": t.to_string(), "lambda1": value, "multiplicity": mult.known() }));
    }
    Ok(Output {
        table,
        json: envelope("lambda1", json!({ "family": family, "rows": rows })),
    })
}

fn degeneracy_block(values: &[berger_core::DegeneracyValue], fmt: &Fmt) -> Block {
    Block {
        tag: "#degeneracy",
        header: vec!["q".into(), "t".into()],
        rows: values
            .iter()
            .map(|v| vec![v.q.to_string(), fmt.enclosure(&v.t)])
            .collect(),
    }
}

pub fn diagram_table(family: &Family, range: &str, k_limit: u32, precision: &Rational, fmt: &Fmt) -> Result<Output> {
    let range: TRange = range.parse()?;
    let d = diagram(family, &range, k_limit, precision)?;
    let mut header = vec!["t".to_string(), "threshold".to_string()];
    header.extend(d.branches.iter().map(|(k, j)| format!("l_{k}_{j}")));
    let mut table = Table::new(header);
    for row in &d.rows {
        let mut cells = vec![fmt.rat(&row.t), fmt.surd(&row.threshold)];
        cells.extend(row.values.iter().map(|v| fmt.surd(v)));
        table.push(cells);
    }
    table.blocks.push(degeneracy_block(&d.degeneracies, fmt));
    Ok(Output {
        table,
        json: envelope("diagram", serde_json::to_value(&d)?),
    })
}

pub fn degeneracies(family: &Family, q_max: u32, precision: &Rational, fmt: &Fmt) -> Result<Output> {
    let tab = degeneracy_values(family, q_max, precision)?;
    let mut table = Table::new(["q", "t", "t_lo", "t_hi", "s", "k", "j", "index_jump"]);
    for v in &tab.values {
        table.push(vec![
            v.q.to_string(),
            fmt.enclosure(&v.t),
            fmt.rat(v.t.lo()),
            fmt.rat(v.t.hi()),
            v.s.to_string(),
            v.branch.0.to_string(),
            v.branch.1.to_string(),
            v.index_jump.to_string(),
        ]);
    }
    if !tab.no_degeneracy.is_empty() {
        eprintln!("no degeneracy value for q in {:?}", tab.no_degeneracy);
    }
    Ok(Output {
        table,
        json: envelope("degeneracies", serde_json::to_value(&tab)?),
    })
}

pub fn morse_at(family: &Family, scales: &[(Rational, FiberScale)], fmt: &Fmt) -> Result<Output> {
    let mut table = Table::new(["t", "morse_index"]);
    let mut rows = Vec::new();
    for (t, scale) in scales {
        let index = morse_index(family, scale)?;
        table.push(vec![fmt.rat(t), index.to_string()]);
        rows.push(json!({ "t": t.to_string(), "morse_index": index }));
    }
    Ok(Output {
        table,
        json: envelope("morse", json!({ "family": family, "rows": rows })),
    })
}

fn endpoint(q: Option<u32>, t: &Option<Enclosure>, fmt: &Fmt, missing: &str) -> [String; 2] {
    match (q, t) {
        (Some(q), Some(t)) => [q.to_string(), fmt.enclosure(t)],
        _ => [String::new(), missing.to_string()],
    }
}

pub fn morse_profile_table(family: &Family, q_max: u32, precision: &Rational, fmt: &Fmt) -> Result<Output> {
    let profile = morse_profile(family, q_max, precision)?;
    let mut table = Table::new(["lower_q", "lower_t", "upper_q", "upper_t", "morse_index"]);
    for MorsePiece {
        lower_q,
        lower_t,
        upper_q,
        upper_t,
        index,
    } in &profile.pieces
    {
        let [lq, lt] = endpoint(*lower_q, lower_t, fmt, "0");
        let [uq, ut] = endpoint(*upper_q, upper_t, fmt, "inf");
        table.push(vec![lq, lt, uq, ut, index.to_string()]);
    }
    Ok(Output {
        table,
        json: envelope("morse", serde_json::to_value(&profile)?),
    })
}

pub fn classify_table(
    family: &Family,
    scales: &[(Rational, FiberScale)],
    tolerance: &str,
    fmt: &Fmt,
) -> Result<Output> {
    let tolerance = parse_rational(tolerance)?;
    let mut table = Table::new(["t", "classification", "q", "index_jump", "breaks_symmetry"]);
    let mut rows = Vec::new();
    for (t, scale) in scales {
        let c = classify(family, scale, &tolerance)?;
        let cells = match &c {
            Classification::LocallyRigid => ["locally_rigid", "", "", ""].map(String::from),
            Classification::TrivialBifurcation => ["trivial_bifurcation", "0", "", ""].map(String::from),
            Classification::Bifurcation {
                q,
                index_jump,
                breaks_symmetry,
            } => [
                "bifurcation".to_string(),
                q.to_string(),
                index_jump.to_string(),
                breaks_symmetry.to_string(),
            ],
            Classification::Undetermined { q, .. } => {
                ["undetermined".to_string(), q.to_string(), String::new(), String::new()]
            }
        };
        let mut row = vec![fmt.rat(t)];
        row.extend(cells);
        table.push(row);
        rows.push(json!({ "t": t.to_string(), "classification": c }));
    }
    Ok(Output {
        table,
        json: envelope(
            "classify",
            json!({ "family": family, "tolerance": tolerance.to_string(), "rows": rows }),
        ),
    })
}

pub fn verify_table(report: &VerificationReport) -> Result<Output> {
    let mut table = Table::new(["check", "passed", "cases", "failures", "seconds"]);
    for c in &report.checks {
        table.push(vec![
            c.name.to_string(),
            c.passed.to_string(),
            c.cases.to_string(),
            c.failure_count.to_string(),
            format!("{:.3}", c.seconds),
        ]);
    }
    Ok(Output {
        table,
        json: envelope("verify", serde_json::to_value(report)?),
    })
}
