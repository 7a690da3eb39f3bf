use std::error::Error as StdError;
use std::path::Path;
use std::sync::Arc;

use dedekind::algebra::{latex_var, AlgebraElement, AlgebraMatrix};
use dedekind::det::{invert_numeric, ncdet, DetStrategy};
use dedekind::factor::{
    dedekind_factorization, group_determinant, group_determinant_via_lift, verify_factorization, FactorOptions,
};
use dedekind::group::{builtin_group, catalog_keys, FiniteGroup, Subgroup};
use dedekind::index2::{inverse_2x2, Index2Context};
use dedekind::regrep::RegularRepContext;
use dedekind::report::{Check, CheckStatus, Report};
use dedekind::sample::Sampler;
use dedekind::suite::{self, SuiteConfig};
use dedekind::Error;
use serde_json::{json, Value};

use crate::{Common, Format};

pub type CmdResult = Result<Output, Box<dyn StdError>>;

pub struct Output {
    pub text: String,
    pub passed: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, passed: true }
    }
}

fn usage(msg: impl Into<String>) -> Box<dyn StdError> {
    msg.into().into()
}

fn json_doc(mut body: Value) -> String {
    let mut doc = serde_json::Map::new();
    doc.insert("schema".into(), json!("1"));
    if let Value::Object(fields) = body.take() {
        doc.extend(fields);
    }
    let mut s = serde_json::to_string_pretty(&Value::Object(doc)).expect("json values serialize");
    s.push('\n');
    s
}

fn load_group(cfg: &Common) -> Result<Arc<FiniteGroup>, Box<dyn StdError>> {
    let key = cfg.group.as_deref().ok_or_else(|| usage("--group is required"))?;
    if Path::new(key).is_file() {
        let text = std::fs::read_to_string(key)?;
        return Ok(FiniteGroup::from_json_str(&text)?);
    }
    Ok(builtin_group(key)?)
}

fn load_subgroup(cfg: &Common, group: &Arc<FiniteGroup>) -> Result<Option<Subgroup>, Box<dyn StdError>> {
    Ok(match &cfg.subgroup {
        Some(spec) => Some(Subgroup::parse(group, spec)?),
        None => None,
    })
}

/// The given subgroup, or else the first abelian subgroup of index 2.
fn index2_subgroup(cfg: &Common, group: &Arc<FiniteGroup>) -> Result<Subgroup, Box<dyn StdError>> {
    if let Some(h) = load_subgroup(cfg, group)? {
        return Ok(h);
    }
    Subgroup::all_abelian(group)
        .into_iter()
        .find(|h| h.index() == 2)
        .ok_or_else(|| {
            usage(format!(
                "{} has no abelian subgroup of index 2; pass --subgroup",
                group.label()
            ))
        })
}

fn element_from(group: &Arc<FiniteGroup>, coeffs: Option<Vec<i64>>) -> Result<AlgebraElement, Box<dyn StdError>> {
    match coeffs {
        None => Ok(AlgebraElement::generic(group)),
        Some(c) if c.len() == group.order() => Ok(AlgebraElement::from_ints(group, &c)),
        Some(c) => Err(usage(format!(
            "--coeffs has {} values, the group has order {}",
            c.len(),
            group.order()
        ))),
    }
}

fn no_latex(cfg: &Common, command: &str) -> Result<(), Box<dyn StdError>> {
    if cfg.format == Format::Latex {
        return Err(usage(format!("latex output is not available for `{command}`")));
    }
    Ok(())
}

pub fn groups(cfg: &Common) -> CmdResult {
    no_latex(cfg, "groups")?;
    let keys = catalog_keys();
    Ok(Output::ok(match cfg.format {
        Format::Json => json_doc(json!({
            "groups": keys.iter().map(|(k, d)| json!({"key": k, "description": d})).collect::<Vec<_>>(),
        })),
        _ => keys.iter().map(|(k, d)| format!("{k:<24}{d}\n")).collect(),
    }))
}

pub fn theta(cfg: &Common) -> CmdResult {
    let g = load_group(cfg)?;
    let strategy = DetStrategy::from(cfg.det_strategy);
    let theta = match strategy {
        DetStrategy::MinorExpansion => group_determinant(&g, cfg.order_cap)?,
        _ => {
            let direct = group_determinant(&g, cfg.order_cap)?;
            let lifted = group_determinant_via_lift(&g, strategy)?;
            if lifted != direct {
                return Err(Error::StrategyMismatch(format!("{strategy} disagrees with minor expansion")).into());
            }
            lifted
        }
    };
    Ok(Output::ok(match cfg.format {
        Format::Text => format!("{theta}\n"),
        Format::Latex => format!("{}\n", theta.to_latex(&latex_var)),
        Format::Json => json_doc(json!({
            "group": g.label(),
            "order": g.order(),
            "theta": {"text": theta.to_string(), "terms": theta.to_json(g.order())},
        })),
    }))
}

pub fn factorize(cfg: &Common) -> CmdResult {
    let g = load_group(cfg)?;
    let h = match load_subgroup(cfg, &g)? {
        Some(h) => h,
        None if g.is_abelian() => Subgroup::whole(&g),
        None => return Err(usage("--subgroup is required for a nonabelian group")),
    };
    let options = FactorOptions {
        strategy: cfg.det_strategy.into(),
        order_cap: cfg.order_cap,
    };
    let result = dedekind_factorization(&g, &h, options)?;
    let report = verify_factorization(&result);
    let passed = report.passed();
    let text = match cfg.format {
        Format::Text => {
            let mut s = format!("Theta(G) = {}\n", result.theta());
            for (x, a) in &result.coefficients {
                s.push_str(&format!("a_{} = {a}\n", g.name(*x)));
            }
            for (chi, f) in result.characters.iter().zip(&result.factors_algebra) {
                s.push_str(&format!("F[{}] = {f}\n", chi.describe()));
            }
            s.push_str(&report.to_string());
            s
        }
        Format::Latex => result.to_latex(),
        Format::Json => {
            let mut body = result.to_json();
            body["checks"] = checks_json(&report);
            body["passed"] = json!(passed);
            json_doc(body)
        }
    };
    Ok(Output { text, passed })
}

fn checks_json(report: &Report) -> Value {
    let map: serde_json::Map<String, Value> = report
        .checks
        .iter()
        .map(|c| {
            let v = match c.status {
                CheckStatus::Pass => json!(true),
                CheckStatus::Fail => json!(false),
                CheckStatus::Skipped | CheckStatus::Info => json!(null),
            };
            (c.name.clone(), v)
        })
        .collect();
    Value::Object(map)
}

pub fn verify(cfg: &Common, all: bool) -> CmdResult {
    no_latex(cfg, "verify")?;
    if !all {
        if cfg.group.is_none() {
            return Err(usage("pass --all, or --group with --subgroup"));
        }
        return factorize(cfg);
    }
    let suite_cfg = SuiteConfig {
        seed: cfg.seed,
        strategy: cfg.det_strategy.into(),
        order_cap: cfg.order_cap,
        ..SuiteConfig::default()
    };
    let outcomes = suite::run_all(&suite_cfg)?;
    let passed = outcomes.iter().all(|o| o.passed());
    let text = match cfg.format {
        Format::Json => json_doc(json!({
            "passed": passed,
            "seed": cfg.seed,
            "criteria": outcomes.iter().map(|o| json!({
                "id": o.id,
                "title": o.title,
                "passed": o.passed(),
                "checks": o.report.checks,
            })).collect::<Vec<_>>(),
        })),
        _ => {
            let mut s = String::new();
            for o in &outcomes {
                let total = o.report.checks.iter().filter(|c| c.status != CheckStatus::Info).count();
                let ok = o.report.checks.iter().filter(|c| c.status == CheckStatus::Pass).count();
                s.push_str(&format!(
                    "criterion {:<2} {} {} ({ok}/{total})\n",
                    o.id,
                    if o.passed() { "PASS" } else { "FAIL" },
                    o.title
                ));
                for c in o.report.checks.iter().filter(|c| c.failed()) {
                    s.push_str(&format!("    failed: {}", c.name));
                    if let Some(d) = &c.detail {
                        s.push_str(&format!(" ({d})"));
                    }
                    s.push('\n');
                }
            }
            s.push_str(if passed {
                "all criteria pass\n"
            } else {
                "some criteria fail\n"
            });
            s
        }
    };
    Ok(Output { text, passed })
}

pub fn conjugate(cfg: &Common, coeffs: Option<Vec<i64>>) -> CmdResult {
    let g = load_group(cfg)?;
    let h = index2_subgroup(cfg, &g)?;
    let ctx = Index2Context::new(&h)?;
    let a = element_from(&g, coeffs)?;
    let conj = ctx.conjugate(&a);
    let d = ctx.decompose(&a);
    Ok(Output::ok(match cfg.format {
        Format::Text => format!(
            "subgroup = {}\nt = {}\nA = {a}\nalpha = {}\nbeta = {}\nconj(A) = {conj}\n",
            h.display(),
            g.name(ctx.t()),
            d.alpha,
            d.beta
        ),
        Format::Latex => format!("\\overline{{A}} = {}\n", conj.to_latex()),
        Format::Json => json_doc(json!({
            "group": g.label(),
            "subgroup": h.elements().iter().map(|&x| g.name(x)).collect::<Vec<_>>(),
            "t": g.name(ctx.t()),
            "element": a.to_json(),
            "alpha": d.alpha.to_json(),
            "beta": d.beta.to_json(),
            "conjugate": conj.to_json(),
        })),
    }))
}

pub fn invert2(cfg: &Common, samples: usize) -> CmdResult {
    no_latex(cfg, "invert2")?;
    let g = load_group(cfg)?;
    let h = index2_subgroup(cfg, &g)?;
    let ctx = Index2Context::new(&h)?;
    let oracle_ctx = RegularRepContext::new(&h, 2);
    let mut report = Report::new(format!("2x2 inverse over {} in {}", h.display(), g.label()));
    let mut sampler = Sampler::new(cfg.seed, 2);
    let (mut two_sided, mut agree, mut central, mut inverted, mut printed) = (true, true, true, 0usize, 0usize);
    let mut first_bad = None;
    for k in 0..samples {
        let m = sampler.matrix(&g, 2);
        let oracle = invert_numeric(&oracle_ctx, &m);
        match inverse_2x2(&ctx, &m) {
            Ok(inv) => {
                inverted += 1;
                printed += inv.alternate_multiplier_matches as usize;
                central &= inv.beta_gamma_central();
                let ok = (&m * &inv.inverse).is_identity() && (&inv.inverse * &m).is_identity();
                let same = oracle.as_ref().ok() == Some(&inv.inverse);
                if (!ok || !same) && first_bad.is_none() {
                    first_bad = Some(format!("sample {k}"));
                }
                two_sided &= ok;
                agree &= same;
            }
            Err(Error::SingularMatrix) => agree &= oracle.is_err(),
            Err(e) => return Err(e.into()),
        }
    }
    report.push(
        Check::new(format!("2x2 inverse is two-sided on {samples} samples"), two_sided)
            .with_detail(Some(format!("{inverted} invertible"))),
    );
    report.push(Check::new("2x2 inverse agrees with the generic inversion route", agree).with_detail(first_bad));
    report.push(Check::new("beta and gamma are central", central));
    report.push(Check::info(
        "printed multiplier reproduces the displayed entries",
        format!("{printed} of {inverted} samples"),
    ));
    let passed = report.passed();
    let text = match cfg.format {
        Format::Json => json_doc(json!({
            "group": g.label(),
            "subgroup": h.elements().iter().map(|&x| g.name(x)).collect::<Vec<_>>(),
            "seed": cfg.seed,
            "samples": samples,
            "invertible": inverted,
            "passed": passed,
            "checks": report.checks,
        })),
        _ => report.to_string(),
    };
    Ok(Output { text, passed })
}

pub fn lift(cfg: &Common, coeffs: Option<Vec<i64>>) -> CmdResult {
    let g = load_group(cfg)?;
    let h = load_subgroup(cfg, &g)?.ok_or_else(|| usage("--subgroup is required"))?;
    let ctx = RegularRepContext::new(&h, 1);
    let a = AlgebraMatrix::single(&element_from(&g, coeffs)?);
    let lifted = ctx.lift(&a)?;
    let det = if h.is_abelian() {
        Some(ncdet(&ctx, &a, cfg.det_strategy.into())?)
    } else {
        None
    };
    let reps: Vec<&str> = ctx.transversal().reps().iter().map(|&t| g.name(t)).collect();
    Ok(Output::ok(match cfg.format {
        Format::Text => {
            let mut s = format!("transversal = [{}]\n", reps.join(", "));
            s.push_str(&lifted.render_blocks(1));
            if let Some(d) = &det {
                s.push_str(&format!("Det = {d}\n"));
            }
            s
        }
        Format::Latex => {
            let rows: Vec<String> = (0..lifted.size())
                .map(|i| {
                    (0..lifted.size())
                        .map(|j| lifted.get(i, j).to_latex())
                        .collect::<Vec<_>>()
                        .join(" & ")
                })
                .collect();
            format!("\\begin{{pmatrix}}\n{}\n\\end{{pmatrix}}\n", rows.join(" \\\\\n"))
        }
        Format::Json => json_doc(json!({
            "group": g.label(),
            "subgroup": h.elements().iter().map(|&x| g.name(x)).collect::<Vec<_>>(),
            "transversal": reps,
            "lift": lifted.to_json(),
            "det": det.as_ref().map(AlgebraElement::to_json),
        })),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_documents_carry_the_schema_version() {
        let v: Value = serde_json::from_str(&json_doc(json!({"a": 1}))).unwrap();
        assert_eq!(v["schema"], "1");
        assert_eq!(v["a"], 1);
    }

    #[test]
    fn coefficient_count_is_checked() {
        let g = builtin_group("cyclic:3").unwrap();
        assert!(element_from(&g, Some(vec![1, 2])).is_err());
        assert_eq!(element_from(&g, Some(vec![1, 0, 0])).unwrap(), AlgebraElement::one(&g));
    }
}
