use std::error::Error;
use std::fmt::Write as _;
use std::fs;
use std::time::Duration;

use serde_json::{json, Value};

use quadform::chow::{
    chow_basis, even_intersection_table, intersection_table_text, mono_codim, presentation, ChowClass, GysinTable,
};
use quadform::formula::{from_json, to_json, FieldJson};
use quadform::hopf::{bound_table, odd_witness, HopfTriple};
use quadform::motivic::{diagonal_power, dq_power_a, DQRingSpec, Epsilon, RhoMode};
use quadform::search::{hopf_consistency_sweep_with, search, to_json_lines, SearchOptions, SearchProblem};

use crate::{Command, EpsilonArg, Format, RhoArg, SearchArgs};

pub struct Output {
    pub stdout: String,
    pub code: u8,
}

type CmdResult = Result<Output, Box<dyn Error>>;

fn ok(stdout: String) -> CmdResult {
    Ok(Output { stdout, code: 0 })
}

fn verdict(stdout: String, holds: bool) -> CmdResult {
    Ok(Output { stdout, code: if holds { 0 } else { 1 } })
}

fn line(v: Value) -> String {
    v.to_string() + "\n"
}

fn seconds(budget: Option<f64>) -> Result<Option<Duration>, Box<dyn Error>> {
    budget.map(|b| Duration::try_from_secs_f64(b).map_err(|e| format!("bad budget {b}: {e}").into())).transpose()
}

pub fn run(cmd: &Command, format: Format) -> CmdResult {
    match cmd {
        Command::Verify { path } => verify(path, format),
        Command::Hopf { r, s, n } => hopf(*r, *s, *n, format),
        Command::Bounds { rmax, smax } => bounds(*rmax, *smax, format),
        Command::RingPower { n, m, rho, epsilon } => ring_power(*n, *m, *rho, *epsilon, format),
        Command::Motivic { r, s, n } => motivic(*r, *s, *n, format),
        Command::Chow { m, gysin } => match (m, gysin) {
            (_, Some(n)) => gysin_table(*n, format),
            (Some(m), None) => chow_ring(*m, format),
            (None, None) => Err("give a quadric dimension or --gysin N".into()),
        },
        Command::Search { r, s, n, p, opts } => run_search(*r, *s, *n, *p, opts, format),
        Command::Sweep { rmax, smax, nmax, p, budget } => sweep(*rmax, *smax, *nmax, *p, *budget, format),
    }
}

fn verify(path: &std::path::Path, format: Format) -> CmdResult {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let f = from_json(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    let expansion = f.verify_by_expansion();
    let hurwitz = f.verify_by_hurwitz()?;
    let holds = expansion && hurwitz;
    let kind = format!("[{},{},{}]", f.r(), f.s(), f.n());
    let out = match format {
        Format::Json => line(json!({
            "r": f.r(), "s": f.s(), "n": f.n(),
            "field": serde_json::to_value(FieldJson::from_ring(f.ring()))?,
            "expansion": expansion, "hurwitz": hurwitz, "verified": holds,
        })),
        Format::Csv => {
            format!("r,s,n,field,expansion,hurwitz\n{},{},{},{},{expansion},{hurwitz}\n", f.r(), f.s(), f.n(), f.ring())
        }
        Format::Text if holds => format!("verified {kind} over {}\n", f.ring()),
        Format::Text => {
            let defect = f.expansion_defect().to_text(&f.names());
            format!("not a formula: {kind} over {}\ndefect: {defect}\n", f.ring())
        }
    };
    verdict(out, holds)
}

fn hopf(r: u64, s: u64, n: u64, format: Format) -> CmdResult {
    if r == 0 || s == 0 || n == 0 {
        return Err("r, s and n must be positive".into());
    }
    let witness = odd_witness(HopfTriple::new(r, s, n));
    let out = match format {
        Format::Json => line(json!({"r": r, "s": s, "n": n, "admissible": witness.is_none(), "witness": witness})),
        Format::Csv => format!(
            "r,s,n,admissible,witness\n{r},{s},{n},{},{}\n",
            witness.is_none(),
            witness.map(|i| i.to_string()).unwrap_or_default()
        ),
        Format::Text => match witness {
            None => "admissible\n".to_string(),
            Some(i) => format!("inadmissible: C({n},{i}) odd\n"),
        },
    };
    verdict(out, witness.is_none())
}

fn bounds(rmax: u64, smax: u64, format: Format) -> CmdResult {
    let table = bound_table(rmax, smax)?;
    ok(match format {
        Format::Json => line(serde_json::to_value(&table)?),
        Format::Csv => table.to_csv(),
        Format::Text => table.to_text(),
    })
}

fn spec_from(n: usize, rho: RhoArg, epsilon: EpsilonArg) -> DQRingSpec {
    let rho = match rho {
        RhoArg::Zero => RhoMode::Zero,
        RhoArg::Formal => RhoMode::Formal,
    };
    let epsilon = match epsilon {
        EpsilonArg::Zero => Epsilon::Zero,
        EpsilonArg::Rho => Epsilon::Rho,
    };
    DQRingSpec::all_squares(n).with_rho(rho).with_epsilon(epsilon)
}

fn ring_power(n: usize, m: u64, rho: RhoArg, epsilon: EpsilonArg, format: Format) -> CmdResult {
    if epsilon == EpsilonArg::Rho && rho == RhoArg::Zero {
        return Err("--epsilon rho needs --rho formal".into());
    }
    let spec = spec_from(n, rho, epsilon);
    let class = dq_power_a(spec, m);
    ok(match format {
        Format::Json => line(json!({
            "n": n, "m": m,
            "rho": if rho == RhoArg::Zero { "0" } else { "formal" },
            "epsilon": if epsilon == EpsilonArg::Zero { "0" } else { "rho" },
            "class": class.to_string(), "zero": class.is_zero(),
        })),
        Format::Csv => format!("n,m,class\n{n},{m},{class}\n"),
        Format::Text => format!("{class}\n"),
    })
}

fn motivic(r: usize, s: usize, n: u64, format: Format) -> CmdResult {
    if r == 0 || s == 0 || n == 0 {
        return Err("r, s and n must be positive".into());
    }
    let power = diagonal_power(r, s, n);
    let holds = power.is_zero();
    let out = match format {
        Format::Json => line(json!({
            "r": r, "s": s, "n": n, "admissible": holds,
            "power": power.to_string(), "surviving_degrees": power.left_degrees(),
        })),
        Format::Csv => format!("r,s,n,admissible,power\n{r},{s},{n},{holds},{power}\n"),
        Format::Text if holds => format!("admissible: (a1 + a2)^{n} = 0 in DQ_{} x DQ_{}\n", r - 1, s - 1),
        Format::Text => format!("inadmissible: (a1 + a2)^{n} = {power}\n"),
    };
    verdict(out, holds)
}

fn chow_ring(m: usize, format: Format) -> CmdResult {
    let rows: Vec<(u32, String)> = chow_basis(m)
        .into_iter()
        .map(|mono| (mono_codim(m, mono), ChowClass::monomial(m, 1, mono.0, mono.1).to_string()))
        .collect();
    let table = (m.is_multiple_of(2) && m >= 2).then(|| even_intersection_table(m / 2)).transpose()?;
    ok(match format {
        Format::Json => line(json!({
            "m": m,
            "presentation": presentation(m),
            "basis": rows.iter().map(|(c, t)| json!({"codim": c, "class": t})).collect::<Vec<_>>(),
            "middle_intersections": table.as_ref().map(intersection_table_text),
        })),
        Format::Csv => {
            let mut out = String::from("codim,class\n");
            for (c, t) in &rows {
                let _ = writeln!(out, "{c},{t}");
            }
            out
        }
        Format::Text => {
            let mut out = presentation(m) + "\n";
            for (c, t) in &rows {
                let _ = writeln!(out, "  CH^{c}: {t}");
            }
            if let Some(t) = &table {
                let _ =
                    writeln!(out, "middle classes alpha = y, beta = x^{} - y: {}", m / 2, intersection_table_text(t));
            }
            out
        }
    })
}

fn gysin_table(n: usize, format: Format) -> CmdResult {
    let table = GysinTable::new(n)?;
    ok(match format {
        Format::Json => {
            let rows: Vec<Value> = (0..n)
                .map(|i| {
                    json!({"i": i, "pushforward": matrix_json(&table.push[i]), "pullback": matrix_json(&table.pull[i])})
                })
                .collect();
            line(json!({"n": n, "rows": rows}))
        }
        Format::Csv => table.to_csv(),
        Format::Text => table.to_text(),
    })
}

/// Entries as decimal strings, since they are unbounded integers.
fn matrix_json<T: ToString>(m: &[Vec<T>]) -> Value {
    json!(m.iter().map(|r| r.iter().map(T::to_string).collect::<Vec<_>>()).collect::<Vec<_>>())
}

fn run_search(r: usize, s: usize, n: usize, p: u64, args: &SearchArgs, format: Format) -> CmdResult {
    let max_solutions = if args.exhaustive { None } else { Some(args.max.unwrap_or(1)) };
    let options = SearchOptions {
        canonical_first_matrix: !args.no_canonical,
        signed_monomial_only: args.signed,
        max_solutions,
        time_budget: seconds(args.budget)?,
    };
    let out = search(&SearchProblem::new(r, s, n, p).with_options(options))?;
    let status = if out.timed_out {
        "timeout"
    } else if out.exhausted {
        "exhausted"
    } else {
        "stopped"
    };
    ok(match format {
        Format::Json => to_json_lines(&out.formulas),
        Format::Csv => {
            let mut body = String::from("r,s,n,p,count,status\n");
            let _ = writeln!(body, "{r},{s},{n},{p},{},{status}", out.formulas.len());
            body
        }
        Format::Text => {
            let mut body = format!("{} formula(s) of type [{r},{s},{n}] over GF({p}), {status}\n", out.formulas.len());
            for f in &out.formulas {
                body.push_str(&to_json(f));
                body.push('\n');
            }
            body
        }
    })
}

fn sweep(rmax: usize, smax: usize, nmax: usize, p: u64, budget: Option<f64>, format: Format) -> CmdResult {
    let report = hopf_consistency_sweep_with(rmax, smax, nmax, p, seconds(budget)?)?;
    let out = match format {
        Format::Json => line(serde_json::to_value(&report)?),
        Format::Csv => report.to_csv(),
        Format::Text => report.to_text(),
    };
    verdict(out, report.violations == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn budgets() {
        assert_eq!(seconds(Some(1.5)).unwrap(), Some(Duration::from_millis(1500)));
        assert_eq!(seconds(None).unwrap(), None);
        assert!(seconds(Some(-1.0)).is_err());
    }

    #[test]
    fn hopf_exit_codes() {
        assert_eq!(hopf(2, 2, 2, Format::Text).unwrap().code, 0);
        assert_eq!(hopf(3, 3, 3, Format::Text).unwrap().code, 1);
        assert!(hopf(0, 3, 3, Format::Text).is_err());
    }

    #[test]
    fn matrices_as_strings() {
        assert_eq!(matrix_json(&[vec![1, 1]]).to_string(), r#"[["1","1"]]"#);
    }
}
