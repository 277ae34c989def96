use pcmtie::{
    additive_violations, additive_weights, gmm_weights, manipulation_report,
    max_changed_entries, multiplicative_violations, normalize_weights, project_to_tie,
    ranking_of, scan_all_pairs, tip_pair, to_multiplicative, verify_manipulation,
    AlternativePair, PcmError, Tolerances,
};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::input::{check_names, load, parse_matrix_file, read_input, Loaded, MatrixFile, Scale};
use crate::output::*;
use crate::{Cli, Command, PairArg};

/// Runs a subcommand and returns its rendered output and exit code.
pub fn run(cli: &Cli) -> Result<(String, u8), CliError> {
    let o = &cli.opts;
    let tol = Tolerances::new(o.tol_reciprocity, o.tol_antisymmetry, o.tol_tie)
        .map_err(|e| CliError::BadArgs(e.to_string()))?;
    let (Command::Validate { input }
    | Command::Weights { input, .. }
    | Command::Project { input, .. }
    | Command::Tip { input, .. }
    | Command::Emi { input, .. }
    | Command::Scan { input }
    | Command::Convert { input, .. }) = &cli.command;
    let text = read_input(input)?;
    let file = parse_matrix_file(input, &text, o.scale, o.names)?;
    let fmt = o.output;

    if let Command::Validate { .. } = cli.command {
        return Ok(validate(&file, &tol, fmt));
    }
    let loaded = load(file, &tol)?;
    let out = match &cli.command {
        Command::Validate { .. } => unreachable!(),
        Command::Weights { normalize, .. } => weights(&loaded, *normalize, &tol, fmt)?,
        Command::Project { pair, .. } => project(&loaded, parse_pair(pair, loaded.n())?, &tol, fmt)?,
        Command::Tip {
            pair,
            winner,
            delta,
            ..
        } => {
            let pair = parse_pair(pair, loaded.n())?;
            if *winner == 0 || !pair.contains(winner - 1) {
                return Err(CliError::BadArgs(format!(
                    "--winner {winner} is not a member of the pair {pair}"
                )));
            }
            if !(*delta > 0.0 && delta.is_finite()) {
                return Err(CliError::BadArgs(format!("--delta must be positive, got {delta}")));
            }
            tip(&loaded, pair, winner - 1, *delta, &tol, fmt)?
        }
        Command::Emi { pair, .. } => emi(&loaded, parse_pair(pair, loaded.n())?, &tol, fmt)?,
        Command::Scan { .. } => scan(&loaded, &tol, fmt)?,
        Command::Convert { to, .. } => convert(&loaded, *to, fmt)?,
    };
    Ok((out, 0))
}

fn parse_pair(arg: &PairArg, n: usize) -> Result<AlternativePair, CliError> {
    let (a, b) = (arg.pair[0], arg.pair[1]);
    AlternativePair::from_one_based(a, b, n).map_err(|_| {
        CliError::BadArgs(format!(
            "--pair {a} {b}: need two distinct alternatives between 1 and {n}"
        ))
    })
}

fn labels(l: &Loaded) -> Labels<'_> {
    Labels(l.file.names.as_deref())
}

fn names_json(l: &Loaded) -> Value {
    json!(l.file.names)
}

fn violation_location(e: &PcmError) -> Option<(usize, usize)> {
    match *e {
        PcmError::NonFinite { row, col }
        | PcmError::NonPositiveEntry { row, col, .. }
        | PcmError::ReciprocityViolation { row, col, .. }
        | PcmError::AntisymmetryViolation { row, col, .. } => Some((row + 1, col + 1)),
        _ => None,
    }
}

fn validate(file: &MatrixFile, tol: &Tolerances, fmt: Format) -> (String, u8) {
    let mut messages: Vec<(Option<(usize, usize)>, String)> = match file.scale {
        Scale::Multiplicative => multiplicative_violations(&file.matrix, tol),
        Scale::Additive => additive_violations(&file.matrix, tol),
    }
    .iter()
    .map(|e| (violation_location(e), e.to_string()))
    .collect();
    if let Err(e) = check_names(file) {
        messages.push((None, e.to_string()));
    }
    let valid = messages.is_empty();
    let n = file.matrix.dim();
    let out = match fmt {
        Format::Text => {
            let mut s = format!("scale: {}\nalternatives: {n}\n", file.scale.as_str());
            s.push_str(&tolerances_text(tol));
            if valid {
                s.push_str("status: valid\n");
            } else {
                s.push_str(&format!("status: invalid ({} violations)\n", messages.len()));
                for (_, m) in &messages {
                    s.push_str(&format!("  {m}\n"));
                }
            }
            s
        }
        Format::Json => {
            let v = json!({
                "scale": file.scale.as_str(),
                "n": n,
                "valid": valid,
                "violations": messages.iter().map(|(loc, m)| json!({
                    "row": loc.map(|l| l.0),
                    "col": loc.map(|l| l.1),
                    "message": m,
                })).collect::<Vec<_>>(),
                "tolerances": tolerances_json(tol),
            });
            format!("{v:#}\n")
        }
        Format::Csv => csv_table(
            &["row", "col", "message"],
            messages.iter().map(|(loc, m)| {
                let (r, c) = loc.map_or((String::new(), String::new()), |(r, c)| {
                    (r.to_string(), c.to_string())
                });
                vec![r, c, m.clone()]
            }),
        ),
    };
    (out, if valid { 0 } else { 3 })
}

fn weights(l: &Loaded, normalize: bool, tol: &Tolerances, fmt: Format) -> Result<String, CliError> {
    let (method, mut w) = match &l.multiplicative {
        Some(m) => ("geometric mean", gmm_weights(m)),
        None => ("row arithmetic mean", additive_weights(&l.additive)),
    };
    if normalize {
        w = normalize_weights(&w)?;
    }
    let ranking = ranking_of(&w, tol);
    let lab = labels(l);
    Ok(match fmt {
        Format::Text => {
            let mut s = format!("method: {method}{}\n", if normalize { ", normalized" } else { "" });
            s.push_str(&tolerances_text(tol));
            s.push_str("weights:\n");
            s.push_str(&vector_text(w.values(), &lab));
            s.push_str(&format!("ranking: {}\n", ranking_text(&ranking, &lab)));
            s
        }
        Format::Json => format!(
            "{:#}\n",
            json!({
                "method": method,
                "normalized": normalize,
                "weights": w.values(),
                "ranking": ranking_json(&ranking),
                "names": names_json(l),
                "tolerances": tolerances_json(tol),
            })
        ),
        Format::Csv => csv_table(
            &["alternative", "weight", "rank"],
            (0..w.len()).map(|k| {
                vec![
                    lab.get(k),
                    full(w.get(k)),
                    (ranking.group_of(k).unwrap() + 1).to_string(),
                ]
            }),
        ),
    })
}

fn pair_json(p: AlternativePair) -> Value {
    json!([p.i() + 1, p.j() + 1])
}

fn project(l: &Loaded, pair: AlternativePair, tol: &Tolerances, fmt: Format) -> Result<String, CliError> {
    let r = project_to_tie(&l.additive, pair)?;
    let before = additive_weights(&r.original);
    let after = additive_weights(&r.projected);
    let rank_before = ranking_of(&before, tol);
    let rank_after = ranking_of(&after, tol);
    let lab = labels(l);
    Ok(match fmt {
        Format::Text => {
            let mut s = format!("pair: {pair}\n");
            s.push_str(&tolerances_text(tol));
            s.push_str("projected matrix (additive):\n");
            s.push_str(&matrix_text(r.projected.matrix(), &lab));
            let coeffs: Vec<String> = r.coefficients.iter().map(|c| num(*c)).collect();
            s.push_str(&format!("coefficients: [{}]\n", coeffs.join(", ")));
            if let Some(rl) = &r.relabeling {
                let perm: Vec<String> = rl.as_slice().iter().map(|k| (k + 1).to_string()).collect();
                s.push_str(&format!(
                    "coefficients refer to the basis after relabeling alternatives -> [{}]\n",
                    perm.join(", ")
                ));
            }
            s.push_str(&format!("distance: {}\n", num(r.distance)));
            s.push_str("weights before:\n");
            s.push_str(&vector_text(before.values(), &lab));
            s.push_str("weights after:\n");
            s.push_str(&vector_text(after.values(), &lab));
            s.push_str(&format!("ranking before: {}\n", ranking_text(&rank_before, &lab)));
            s.push_str(&format!("ranking after:  {}\n", ranking_text(&rank_after, &lab)));
            s
        }
        Format::Json => format!(
            "{:#}\n",
            json!({
                "scale": "additive",
                "matrix": r.projected.to_rows(),
                "names": names_json(l),
                "pair": pair_json(pair),
                "coefficients": r.coefficients,
                "relabeling": r.relabeling.as_ref().map(|rl| rl.as_slice().iter().map(|k| k + 1).collect::<Vec<_>>()),
                "distance": r.distance,
                "weights_before": before.values(),
                "weights_after": after.values(),
                "ranking_before": ranking_json(&rank_before),
                "ranking_after": ranking_json(&rank_after),
                "tolerances": tolerances_json(tol),
            })
        ),
        Format::Csv => matrix_csv(r.projected.matrix(), l.file.names.as_deref()),
    })
}

fn tip(
    l: &Loaded,
    pair: AlternativePair,
    winner: usize,
    delta: f64,
    tol: &Tolerances,
    fmt: Format,
) -> Result<String, CliError> {
    let r = project_to_tie(&l.additive, pair)?;
    let t = tip_pair(&r, winner, delta)?;
    let verdict = verify_manipulation(&l.additive, &t.tipped, pair, winner, tol);
    let w = additive_weights(&t.tipped);
    let lab = labels(l);
    let failures: Vec<String> = verdict.failures.iter().map(ToString::to_string).collect();
    Ok(match fmt {
        Format::Text => {
            let mut s = format!(
                "pair: {pair}, winner: {}, delta: {delta:e}\n",
                lab.get(winner)
            );
            s.push_str(&tolerances_text(tol));
            s.push_str("tipped matrix (additive):\n");
            s.push_str(&matrix_text(t.tipped.matrix(), &lab));
            s.push_str(&format!("projection distance: {}\n", num(r.distance)));
            s.push_str(&format!("extra distance: {:e}\n", t.extra_distance));
            s.push_str(&format!("total distance: {}\n", num(t.total_distance)));
            s.push_str("weights:\n");
            s.push_str(&vector_text(w.values(), &lab));
            s.push_str(&format!("ranking: {}\n", ranking_text(&ranking_of(&w, tol), &lab)));
            s.push_str(&format!(
                "verdict: {}{}\n",
                if verdict.passed() { "pass" } else { "fail" },
                if verdict.already_leading {
                    " (winner already led before manipulation)"
                } else {
                    ""
                }
            ));
            for f in &failures {
                s.push_str(&format!("  {f}\n"));
            }
            s
        }
        Format::Json => format!(
            "{:#}\n",
            json!({
                "scale": "additive",
                "matrix": t.tipped.to_rows(),
                "names": names_json(l),
                "pair": pair_json(pair),
                "winner": winner + 1,
                "delta": delta,
                "projection_distance": r.distance,
                "extra_distance": t.extra_distance,
                "total_distance": t.total_distance,
                "weights": w.values(),
                "verdict": {
                    "passed": verdict.passed(),
                    "already_leading": verdict.already_leading,
                    "failures": failures,
                },
                "tolerances": tolerances_json(tol),
            })
        ),
        Format::Csv => matrix_csv(t.tipped.matrix(), l.file.names.as_deref()),
    })
}

fn emi(l: &Loaded, pair: AlternativePair, tol: &Tolerances, fmt: Format) -> Result<String, CliError> {
    let rep = manipulation_report(&l.additive, pair, tol)?;
    let n = l.n();
    let lab = labels(l);
    Ok(match fmt {
        Format::Text => {
            let mut s = format!("pair: {pair}\n");
            s.push_str(&tolerances_text(tol));
            s.push_str("absolute difference |A - A'| (additive):\n");
            s.push_str(&matrix_text(&rep.abs_diff, &lab));
            s.push_str(&format!(
                "nonzero entries: {} of at most {}\n",
                rep.nonzero_count,
                max_changed_entries(n)
            ));
            s.push_str(&format!("EMI: {}\n", num(rep.emi)));
            s.push_str(&format!(
                "exp(EMI) (derived ratio-scale factor): {}\n",
                num(rep.emi.exp())
            ));
            s.push_str(&format!("distance: {}\n", num(rep.distance)));
            s
        }
        Format::Json => format!(
            "{:#}\n",
            json!({
                "pair": pair_json(pair),
                "emi": rep.emi,
                "exp_emi": rep.emi.exp(),
                "nonzero_count": rep.nonzero_count,
                "max_changed_entries": max_changed_entries(n),
                "distance": rep.distance,
                "abs_diff": rep.abs_diff.to_rows(),
                "names": names_json(l),
                "tolerances": tolerances_json(tol),
            })
        ),
        Format::Csv => csv_table(
            &["i", "j", "emi", "nonzero_count", "max_changed_entries", "distance"],
            [vec![
                (pair.i() + 1).to_string(),
                (pair.j() + 1).to_string(),
                full(rep.emi),
                rep.nonzero_count.to_string(),
                max_changed_entries(n).to_string(),
                full(rep.distance),
            ]],
        ),
    })
}

fn scan(l: &Loaded, tol: &Tolerances, fmt: Format) -> Result<String, CliError> {
    let table = scan_all_pairs(&l.additive)?;
    let lab = labels(l);
    Ok(match fmt {
        Format::Text => {
            let mut s = tolerances_text(tol);
            s.push_str(&format!(
                "{:>4} {:>12} {:>10} {:>10} {:>10}\n",
                "rank", "pair", "EMI", "distance", "gap"
            ));
            for (k, row) in table.rows.iter().enumerate() {
                let p = format!("({}, {})", lab.get(row.pair.i()), lab.get(row.pair.j()));
                s.push_str(&format!(
                    "{:>4} {:>12} {:>10} {:>10} {:>10}\n",
                    k + 1,
                    p,
                    num(row.emi),
                    num(row.distance),
                    num(row.gap)
                ));
            }
            s
        }
        Format::Json => format!(
            "{:#}\n",
            json!({
                "rows": table.rows.iter().map(|r| json!({
                    "i": r.pair.i() + 1,
                    "j": r.pair.j() + 1,
                    "emi": r.emi,
                    "distance": r.distance,
                    "gap": r.gap,
                })).collect::<Vec<_>>(),
                "names": names_json(l),
                "tolerances": tolerances_json(tol),
            })
        ),
        Format::Csv => csv_table(
            &["i", "j", "emi", "distance", "gap"],
            table.rows.iter().map(|r| {
                vec![
                    (r.pair.i() + 1).to_string(),
                    (r.pair.j() + 1).to_string(),
                    full(r.emi),
                    full(r.distance),
                    full(r.gap),
                ]
            }),
        ),
    })
}

fn convert(l: &Loaded, to: Scale, fmt: Format) -> Result<String, CliError> {
    let matrix = match to {
        Scale::Additive => l.additive.matrix().clone(),
        Scale::Multiplicative => match &l.multiplicative {
            Some(m) => m.matrix().clone(),
            None => to_multiplicative(&l.additive)?.into_matrix(),
        },
    };
    let lab = labels(l);
    Ok(match fmt {
        Format::Text => {
            let mut s = format!("scale: {}\n", to.as_str());
            s.push_str(&matrix_text(&matrix, &lab));
            s
        }
        Format::Json => format!(
            "{:#}\n",
            json!({
                "scale": to.as_str(),
                "matrix": matrix.to_rows(),
                "names": names_json(l),
            })
        ),
        Format::Csv => matrix_csv(&matrix, l.file.names.as_deref()),
    })
}
