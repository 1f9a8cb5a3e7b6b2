mod args;
mod build;
mod output;

use std::io::Read;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use serde_json::json;
use vcg_core::closed_form::{finite_cohomology, vz_cohomology, Ring};
use vcg_core::group::{CheckedSpec, Family};
use vcg_core::linalg::{smith_normal_form, FinAb, IntMatrix};
use vcg_core::oracle::Limits;
use vcg_core::par::Mode;
use vcg_core::verify::{self, CheckKind, Perturbation, VerifyConfig};
use vcg_core::{Error, Result};

use args::{Cli, Command, ComputeArgs, FamilyArg, GroupArgs, SnfArgs, VerifyArgs};

/// Usage and validation errors.
const EXIT_INVALID: u8 = 1;
/// The verify harness found a disagreement.
const EXIT_MISMATCH: u8 = 2;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_INVALID),
            };
        }
    };
    let outcome = match cli.command {
        Command::Compute(a) => compute(&a).map(|()| ExitCode::SUCCESS),
        Command::Ring(a) => ring(&a).map(|()| ExitCode::SUCCESS),
        Command::Period(g) => period(&g).map(|()| ExitCode::SUCCESS),
        Command::Verify(v) => verify(&v),
        Command::Snf(s) => snf(&s).map(|()| ExitCode::SUCCESS),
    };
    outcome.unwrap_or_else(|e| {
        eprintln!("error: {e}");
        ExitCode::from(EXIT_INVALID)
    })
}

fn ring_for(g: &GroupArgs, spec: &CheckedSpec) -> Ring {
    if g.family.is_infinite() {
        Ring::twisted(spec)
    } else {
        Ring::finite(spec)
    }
}

fn compute(a: &ComputeArgs) -> Result<()> {
    let g = &a.group;
    let spec = build::checked_spec(g)?;
    let ring = ring_for(g, &spec);
    let bound = a.bound.unwrap_or_else(|| ring.default_bound());
    let groups: Vec<_> = (0..=bound)
        .map(|n| {
            if g.family.is_infinite() {
                vz_cohomology(&spec, n)
            } else {
                finite_cohomology(&spec, n)
            }
        })
        .collect();
    let period = if g.family.is_infinite() {
        Some(ring.periodicity()?)
    } else {
        None
    };
    if g.json {
        let value = json!({
            "group": output::group_json(g.family, &spec),
            "cohomology": groups.iter().map(output::cohomology_json).collect::<Vec<_>>(),
            "period": period.as_ref().map(|(p, _)| *p),
            "period_class": period.as_ref().map(|(_, c)| ring.render(c)),
        });
        output::print_json(&value);
    } else {
        println!("group: {}", output::group_line(g.family, &spec));
        for h in &groups {
            println!("{}", output::cohomology_line(h));
        }
        if let Some((p, c)) = &period {
            println!("period {p}, class {}", ring.render(c));
        }
    }
    Ok(())
}

fn ring(a: &ComputeArgs) -> Result<()> {
    let g = &a.group;
    let spec = build::checked_spec(g)?;
    let ring = ring_for(g, &spec);
    let bound = a.bound.unwrap_or_else(|| ring.default_bound());
    let pres = ring.presentation(bound)?;
    if g.json {
        let value = json!({
            "group": output::group_json(g.family, &spec),
            "degree_bound": pres.degree_bound,
            "generators": pres.generators.iter().map(|gen| json!({
                "name": gen.name,
                "degree": gen.degree,
                "order": gen.order,
            })).collect::<Vec<_>>(),
            "relations": pres.relations.iter().map(|rel| json!({
                "left": ring.symbol_name(rel.left),
                "right": ring.symbol_name(rel.right),
                "product": ring.render(&rel.product),
                "terms": rel.product.terms.iter().map(|(s, c)| json!({
                    "generator": ring.symbol_name(*s),
                    "coefficient": c,
                })).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        });
        output::print_json(&value);
    } else {
        println!("group: {}", output::group_line(g.family, &spec));
        println!("generators (degree ≤ {bound}):");
        for gen in &pres.generators {
            let order = match gen.order {
                0 => "∞".to_string(),
                o => o.to_string(),
            };
            println!("  {:<12} degree {:<3} order {order}", gen.name, gen.degree);
        }
        println!("products:");
        for rel in &pres.relations {
            println!("  {}", rel.rendered);
        }
    }
    Ok(())
}

fn period(g: &GroupArgs) -> Result<()> {
    if !g.family.is_infinite() {
        return Err(Error::Unsupported(format!(
            "period needs an infinite family (zazbz, zazbqz), not {}",
            g.family.name()
        )));
    }
    let spec = build::checked_spec(g)?;
    let ring = Ring::twisted(&spec);
    let (p, class) = ring.periodicity()?;
    // Periodicity of the groups from degree 2 over two full periods.
    let range = (2, 2 + 2 * p);
    let verified = (range.0..=range.1).all(|n| {
        vz_cohomology(&spec, n).group == vz_cohomology(&spec, n + p).group
    });
    if g.json {
        let value = json!({
            "group": output::group_json(g.family, &spec),
            "period": p,
            "period_class": ring.render(&class),
            "verified_range": [range.0, range.1],
            "verified": verified,
        });
        output::print_json(&value);
    } else {
        println!("period {p}, class {}", ring.render(&class));
        let status = if verified { "holds" } else { "FAILS" };
        println!(
            "H^n ≅ H^(n+{p}) {status} for n in {}..={}",
            range.0, range.1
        );
    }
    Ok(())
}

fn family_filter(f: FamilyArg) -> Family {
    match f {
        FamilyArg::Cyclic | FamilyArg::Metacyclic | FamilyArg::Zazbz => Family::Metacyclic,
        FamilyArg::Q | FamilyArg::Zbq | FamilyArg::Zazbq | FamilyArg::Zazbqz => {
            Family::Quaternionic
        }
    }
}

fn verify(v: &VerifyArgs) -> Result<ExitCode> {
    let caps = Limits::default();
    if v.max_order > caps.max_order {
        return Err(Error::Capacity {
            what: "--max-order".into(),
            size: v.max_order,
            limit: caps.max_order,
        });
    }
    if v.max_degree + 1 > caps.max_degree {
        return Err(Error::Capacity {
            what: "--max-degree".into(),
            size: v.max_degree,
            limit: caps.max_degree - 1,
        });
    }
    if let Some(t) = v.threads {
        if t == 0 {
            return Err(Error::Validation {
                condition: "--threads ≥ 1".into(),
            });
        }
        std::env::set_var("VCG_THREADS", t.to_string());
    }
    let config = VerifyConfig {
        limits: Limits {
            max_order: v.max_order,
            max_degree: v.max_degree,
            ..caps
        },
        samples: v.samples,
        seed: v.seed,
        only: v.only.as_deref().map(str::parse::<CheckKind>).transpose()?,
        family: v.family.map(family_filter),
        perturbation: v.perturb.then_some(Perturbation::FlipGcd),
        mode: if v.sequential {
            Mode::Sequential
        } else {
            Mode::default_mode()
        },
    };
    let report = verify::run(&config);
    if v.json {
        output::print_json(&serde_json::to_value(&report).expect("report serializes"));
    } else {
        output::print_report(&report, v.all);
    }
    Ok(if report.is_success() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_MISMATCH)
    })
}

fn parse_matrix(text: &str) -> Result<IntMatrix> {
    let bad = |why: String| Error::Dimension(format!("matrix {why}"));
    let rows: Vec<Vec<i64>> =
        serde_json::from_str(text.trim()).map_err(|e| bad(format!("not parsed: {e}")))?;
    if rows.is_empty() || rows[0].is_empty() {
        return Err(bad("is empty".into()));
    }
    if rows.iter().any(|r| r.len() != rows[0].len()) {
        return Err(bad("rows differ in length".into()));
    }
    Ok(IntMatrix::from_rows(&rows))
}

fn snf(s: &SnfArgs) -> Result<()> {
    let text = if s.matrix == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::Dimension(format!("stdin: {e}")))?;
        buf
    } else {
        s.matrix.clone()
    };
    let m = parse_matrix(&text)?;
    let res = smith_normal_form(&m);
    let factors = res.invariant_factors();
    let cokernel = FinAb::from_cyclic_orders(
        m.rows() - res.rank(),
        factors.iter().filter(|d| **d != 1.into()).cloned(),
    );
    if s.json {
        let value = json!({
            "d": output::matrix_json(&res.d),
            "u": output::matrix_json(&res.u),
            "v": output::matrix_json(&res.v),
            "rank": res.rank(),
            "invariant_factors": factors.iter().map(output::int_json).collect::<Vec<_>>(),
            "cokernel": output::finab_json(&cokernel),
        });
        output::print_json(&value);
    } else {
        println!("D = {}", res.d);
        println!("U = {}", res.u);
        println!("V = {}", res.v);
        let f: Vec<String> = factors.iter().map(ToString::to_string).collect();
        println!("invariant factors: [{}]", f.join(", "));
        println!("cokernel: {cokernel}");
    }
    Ok(())
}
