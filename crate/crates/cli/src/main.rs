//! `meadow`: evaluate, project, normalize and decide meadow terms, evaluate
//! three-valued formulas, and inspect axiom sets and finite models.

mod report;

use std::io::Write;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use meadow_core::convention::{
    closed_compliance, open_compliance_sufficient, Classifier, ClassifierMode, Compliance,
    ConventionId, OpenCompliance,
};
use meadow_core::logic3::{
    eval_formula, parse_formula, Connectives, Equality, LogicConfig, Quantifiers, TruthValue3,
};
use meadow_core::normalize::{
    decide, decide_iamd_report, normal_form_closed, to_polyfrac, zero_eliminate, Theory, ZeroElim,
};
use meadow_core::partial::{punch_eval, PartialValue, PunchVariant};
use meadow_core::presentations::{builtin, flatten};
use meadow_core::projection::{project, ProjectionId};
use meadow_core::semantics::{
    check_axioms, corollary_witness, eval, expand_regular_ring, two_squares, zp_meadow,
    FiniteMeadow, FiniteRing,
};
use meadow_core::syntax::{parse_term, parse_term_unchecked, SubMode};
use meadow_core::term::{check_signature, Symbol};
use meadow_core::{render, Assignment, PresentationId, Q0Value, SignatureId, Term, Q0};

use report::Report;

const DEFAULT_DOMAIN: &str = "0,1,2";

#[derive(Parser)]
#[command(name = "meadow", version, about = "Terms, models and logics of meadows")]
struct Cli {
    /// Print one JSON object per result.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ModelArgs {
    /// `q0` (the zero-totalized rationals) or `zp:<p>`.
    #[arg(long, default_value = "q0")]
    model: String,
    /// Comma-separated `var=value` pairs, e.g. `x=2/3,y=0`.
    #[arg(long, default_value = "")]
    assign: String,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a term in a total meadow.
    Eval {
        #[command(flatten)]
        model: ModelArgs,
        /// Signature to check the term against; any term over Σ_imd ∪ Σ_dmd
        /// is accepted when omitted.
        #[arg(long)]
        sig: Option<String>,
        term: String,
    },
    /// Evaluate a term in a punched (partial) meadow.
    Peval {
        #[arg(long)]
        variant: String,
        #[command(flatten)]
        model: ModelArgs,
        term: String,
    },
    /// Translate a term between the inversive, divisive and reduced notations.
    Project {
        #[arg(long, value_enum)]
        to: Target,
        term: String,
    },
    /// Normal form of an arithmetical term.
    Normalize {
        #[arg(long, default_value = "iamd")]
        sig: String,
        term: String,
    },
    /// Decide an equation in an arithmetical theory.
    Decide {
        #[arg(long)]
        theory: String,
        lhs: String,
        rhs: String,
    },
    /// Truth value of a sentence in a three-valued logic.
    Truth {
        /// Preset; the individual flags override it.
        #[arg(long, default_value = "lpmd")]
        logic: String,
        #[arg(long)]
        eq: Option<String>,
        #[arg(long)]
        conn: Option<String>,
        #[arg(long)]
        quant: Option<String>,
        #[arg(long, default_value = "div0")]
        variant: String,
        /// Quantifier domain, comma separated. Defaults to the whole carrier
        /// of a finite model, or to MEADOW_DEFAULT_DOMAIN / 0,1,2 in q0.
        #[arg(long)]
        domain: Option<String>,
        #[arg(long, default_value = "q0")]
        model: String,
        formula: String,
    },
    /// Membership in the syntactic sets Def and Nz.
    Classify {
        #[arg(long, value_enum, default_value = "strict")]
        mode: Mode,
        /// Treat variables as defined.
        #[arg(long)]
        vars_defined: bool,
        term: String,
    },
    /// Check a term against a usage convention for inverse or division.
    Comply {
        #[arg(long)]
        convention: String,
        #[arg(long, value_enum, default_value = "strict")]
        mode: Mode,
        term: String,
    },
    /// Check an axiom set exhaustively in a finite model.
    CheckModel {
        /// The zero-totalized prime field Z_p.
        #[arg(long, conflicts_with = "modulus")]
        zp: Option<u64>,
        /// Z_n expanded to a meadow, if it is von Neumann regular.
        #[arg(long)]
        modulus: Option<usize>,
        #[arg(long, default_value = "imd")]
        axioms: String,
    },
    /// Sums of two squares modulo a prime.
    Witness {
        #[arg(long)]
        prime: u64,
        /// Find v, w with v² + w² ≡ u instead of the identity u² + v² + 1 = w·p.
        #[arg(long)]
        residue: Option<u64>,
    },
    /// Show or flatten axiom sets.
    Spec {
        #[arg(long, conflicts_with = "flatten", required_unless_present = "flatten")]
        show: Option<String>,
        #[arg(long)]
        flatten: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Imn,
    Dmn,
    Rdmn,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Strict,
    Literal,
}

fn signature(name: &str) -> Result<SignatureId> {
    SignatureId::from_name(name).ok_or_else(|| anyhow!("unknown signature `{name}`"))
}

/// Parses a term over Σ_imd ∪ Σ_dmd.
fn parse_any(text: &str) -> Result<Term> {
    let t = parse_term_unchecked(text, SubMode::Desugar)?;
    debug_assert!(!t.any(&|s| s.head() == Some(Symbol::Sub)));
    Ok(t)
}

fn parse_in(text: &str, sig: SignatureId) -> Result<Term> {
    Ok(parse_term(text, sig)?)
}

enum ModelSpec {
    Q0,
    Zp(FiniteMeadow),
}

fn model(spec: &str) -> Result<ModelSpec> {
    if spec == "q0" {
        return Ok(ModelSpec::Q0);
    }
    let p = spec
        .strip_prefix("zp:")
        .and_then(|p| p.parse::<u64>().ok())
        .ok_or_else(|| anyhow!("unknown model `{spec}`: expected q0 or zp:<p>"))?;
    Ok(ModelSpec::Zp(zp_meadow(p)?))
}

fn pairs(text: &str) -> Result<Vec<(String, String)>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|kv| {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| anyhow!("bad assignment `{kv}`: expected var=value"))?;
            Ok((k.trim().to_string(), v.trim().to_string()))
        })
        .collect()
}

fn q0_assignment(text: &str) -> Result<Assignment<Q0Value>> {
    pairs(text)?
        .into_iter()
        .map(|(k, v)| Ok((k, v.parse::<Q0Value>()?)))
        .collect()
}

fn residue(v: &str, m: &FiniteMeadow) -> Result<usize> {
    let k: i64 = v
        .parse()
        .with_context(|| format!("`{v}` is not an integer"))?;
    Ok(k.rem_euclid(m.size() as i64) as usize)
}

fn zp_assignment(text: &str, m: &FiniteMeadow) -> Result<Assignment<usize>> {
    pairs(text)?
        .into_iter()
        .map(|(k, v)| Ok((k, residue(&v, m)?)))
        .collect()
}

fn run_eval(args: &ModelArgs, sig: Option<&str>, text: &str) -> Result<Report> {
    let t = match sig {
        Some(s) => parse_in(text, signature(s)?)?,
        None => parse_any(text)?,
    };
    let value = match model(&args.model)? {
        ModelSpec::Q0 => eval(&Q0, &t, &q0_assignment(&args.assign)?)?.to_string(),
        ModelSpec::Zp(m) => eval(&m, &t, &zp_assignment(&args.assign, &m)?)?.to_string(),
    };
    Ok(Report::new("eval", value.clone()).value(value))
}

fn variant(name: &str) -> Result<PunchVariant> {
    PunchVariant::from_name(name)
        .ok_or_else(|| anyhow!("unknown variant `{name}`: expected inv0, div0 or div0lib"))
}

fn run_peval(variant_name: &str, args: &ModelArgs, text: &str) -> Result<Report> {
    let v = variant(variant_name)?;
    let t = parse_in(text, v.signature())?;
    let value: PartialValue<String> = match model(&args.model)? {
        ModelSpec::Q0 => punch_eval(&Q0, &t, v, &q0_assignment(&args.assign)?)?
            .into_option()
            .map(|q| q.to_string())
            .into(),
        ModelSpec::Zp(m) => punch_eval(&m, &t, v, &zp_assignment(&args.assign, &m)?)?
            .into_option()
            .map(|k| k.to_string())
            .into(),
    };
    Ok(match value {
        PartialValue::Defined(s) => Report::new("peval", s.clone())
            .verdict("defined")
            .extra("status", "defined")
            .value(s),
        PartialValue::Undefined => Report::new("peval", "undefined")
            .verdict("undefined")
            .extra("status", "undefined")
            .failing(true),
    })
}

fn run_project(to: Target, text: &str) -> Result<Report> {
    let which = match to {
        Target::Imn => ProjectionId::DmnToImn,
        Target::Dmn => ProjectionId::ImnToDmn,
        Target::Rdmn => ProjectionId::ImnToRdmn,
    };
    let t = parse_in(text, which.source())?;
    let image = render(&project(&t, which)?);
    Ok(Report::new("project", image.clone()).value(image))
}

fn run_normalize(sig_name: &str, text: &str) -> Result<Report> {
    let sig = signature(sig_name)?;
    if !matches!(sig, SignatureId::Iamd | SignatureId::Iamdz) {
        bail!("normalize works over iamd or iamdz, not {sig_name}");
    }
    let t = parse_in(text, sig)?;
    let nf = if t.is_closed() {
        normal_form_closed(&t, sig)?.to_string()
    } else {
        match zero_eliminate(&t)? {
            ZeroElim::Zero => "0".to_string(),
            ZeroElim::Term(s) => to_polyfrac(&s)?.to_string(),
        }
    };
    Ok(Report::new("normalize", nf.clone()).value(nf))
}

fn run_decide(theory_name: &str, lhs: &str, rhs: &str) -> Result<Report> {
    let theory = Theory::from_name(theory_name).ok_or_else(|| {
        anyhow!("unknown theory `{theory_name}`: expected iamd, iamdz-gil, damd or damdz-gil")
    })?;
    let sig = theory.signature();
    let (t, u) = (parse_in(lhs, sig)?, parse_in(rhs, sig)?);
    let holds = decide(&t, &u, theory)?;
    let fractions = match theory {
        Theory::Iamd => Some(decide_iamd_report(&t, &u)?),
        Theory::Damd => {
            let p = |x: &Term| project(x, ProjectionId::DmnToImn);
            Some(decide_iamd_report(&p(&t)?, &p(&u)?)?)
        }
        _ => None,
    };
    let mut r = Report::new("decide", holds.to_string())
        .verdict(holds.to_string())
        .failing(!holds);
    if let Some(d) = fractions {
        r = r.witness(json!({
            "left": d.left.to_string(),
            "right": d.right.to_string(),
            "left_cross": d.left_cross.to_string(),
            "right_cross": d.right_cross.to_string(),
        }));
    }
    Ok(r)
}

fn domain_text(flag: Option<&str>) -> String {
    match flag {
        Some(d) => d.to_string(),
        None => std::env::var("MEADOW_DEFAULT_DOMAIN").unwrap_or_else(|_| DEFAULT_DOMAIN.into()),
    }
}

fn config<V>(
    preset: &str,
    eq: Option<&str>,
    conn: Option<&str>,
    quant: Option<&str>,
    domain: Vec<V>,
) -> Result<LogicConfig<V>> {
    if preset != "lpmd" {
        bail!("unknown logic `{preset}`: the only preset is lpmd");
    }
    let mut cfg = LogicConfig::lpmd(domain);
    if let Some(e) = eq {
        cfg.equality = Equality::from_name(e)
            .ok_or_else(|| anyhow!("unknown equality `{e}`: expected weak, strong or exist"))?;
    }
    if let Some(c) = conn {
        cfg.connectives = Connectives::from_name(c).ok_or_else(|| {
            anyhow!("unknown connectives `{c}`: expected bochvar, mccarthy, mccarthy-rev or kleene")
        })?;
    }
    if let Some(q) = quant {
        cfg.quantifiers = Quantifiers::from_name(q)
            .ok_or_else(|| anyhow!("unknown quantifiers `{q}`: expected bochvar or kleene"))?;
    }
    Ok(cfg)
}

struct TruthArgs<'a> {
    logic: &'a str,
    eq: Option<&'a str>,
    conn: Option<&'a str>,
    quant: Option<&'a str>,
    variant: &'a str,
    domain: Option<&'a str>,
    model: &'a str,
    formula: &'a str,
}

fn run_truth(a: TruthArgs<'_>) -> Result<Report> {
    let v = variant(a.variant)?;
    let f = parse_formula(a.formula, v.signature())?;
    let items = |d: &str| -> Vec<String> {
        d.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect()
    };
    let value = match model(a.model)? {
        ModelSpec::Q0 => {
            let domain = items(&domain_text(a.domain))
                .iter()
                .map(|s| s.parse::<Q0Value>())
                .collect::<Result<Vec<_>, _>>()?;
            let cfg = config(a.logic, a.eq, a.conn, a.quant, domain)?;
            eval_formula(&f, &cfg, v, &Q0, &Assignment::new())?
        }
        ModelSpec::Zp(m) => {
            let domain = match a.domain {
                Some(d) => items(d)
                    .iter()
                    .map(|s| residue(s, &m))
                    .collect::<Result<Vec<_>>>()?,
                None => m.elements().collect(),
            };
            let cfg = config(a.logic, a.eq, a.conn, a.quant, domain)?;
            eval_formula(&f, &cfg, v, &m, &Assignment::new())?
        }
    };
    Ok(Report::new("truth", value.to_string())
        .verdict(value.to_string())
        .failing(value != TruthValue3::T))
}

fn classifier(mode: Mode, vars_defined: bool) -> Classifier {
    Classifier {
        mode: match mode {
            Mode::Strict => ClassifierMode::Strict,
            Mode::Literal => ClassifierMode::Literal,
        },
        vars_defined,
    }
}

fn run_classify(mode: Mode, vars_defined: bool, text: &str) -> Result<Report> {
    let t = parse_in(text, SignatureId::Iamdz)?;
    let class = classifier(mode, vars_defined).classify(&t)?.to_string();
    Ok(Report::new("classify", class.clone()).verdict(class))
}

fn run_comply(convention: &str, mode: Mode, text: &str) -> Result<Report> {
    let c = ConventionId::from_name(convention).ok_or_else(|| {
        anyhow!("unknown convention `{convention}`: expected inv, div or div-liberal")
    })?;
    let t = parse_in(text, c.signature())?;
    if !t.is_closed() {
        if c != ConventionId::RelevantInversive {
            bail!("open terms can only be certified for the inv convention");
        }
        check_signature(&t, SignatureId::Iamdz)
            .context("open terms are certified over the arithmetical signature with zero")?;
        let verdict = match open_compliance_sufficient(&t, &classifier(mode, false))? {
            OpenCompliance::CertifiedCompliant => "CertifiedCompliant",
            OpenCompliance::Unknown => "Unknown",
        };
        return Ok(Report::new("comply", verdict)
            .verdict(verdict)
            .failing(verdict == "Unknown"));
    }
    Ok(match closed_compliance(&t, c)? {
        Compliance::Compliant => Report::new("comply", "Compliant").verdict("Compliant"),
        Compliance::Violation {
            subterm,
            numerator,
            denominator,
        } => {
            let s = render(&subterm);
            let mut w = json!({ "subterm": s, "denominator": denominator.to_string() });
            if let Some(n) = &numerator {
                w["numerator"] = n.to_string().into();
            }
            Report::new("comply", format!("Violation: {s}"))
                .verdict("Violation")
                .witness(w)
                .failing(true)
        }
    })
}

fn run_check_model(zp: Option<u64>, modulus: Option<usize>, axioms: &str) -> Result<Report> {
    let set = PresentationId::from_name(axioms)
        .ok_or_else(|| anyhow!("unknown axiom set `{axioms}`"))?;
    let (name, m) = match (zp, modulus) {
        (Some(p), _) => (format!("Z_{p}"), zp_meadow(p)?),
        (None, Some(n)) => (format!("Z_{n}"), expand_regular_ring(&FiniteRing::zn(n)?)?),
        (None, None) => bail!("give --zp <p> or --modulus <n>"),
    };
    let failures = check_axioms(&m, set);
    let n = set.equations().len();
    if failures.is_empty() {
        let text = format!("{name} satisfies {set} ({n} equations)");
        return Ok(Report::new("check-model", text).verdict("true"));
    }
    let text = failures
        .iter()
        .map(|f| format!("FAIL {f}"))
        .collect::<Vec<_>>()
        .join("\n");
    let witness: Vec<_> = failures
        .iter()
        .map(|f| {
            json!({
                "equation": f.equation.name,
                "assignment": f.witness,
                "lhs": f.lhs_value,
                "rhs": f.rhs_value,
            })
        })
        .collect();
    Ok(Report::new("check-model", text)
        .verdict("false")
        .witness(witness.into())
        .failing(true))
}

fn run_witness(p: u64, u: Option<u64>) -> Result<Report> {
    Ok(match u {
        Some(u) => {
            let (v, w) = two_squares(p, u)?;
            Report::new("witness", format!("{v}^2 + {w}^2 = {u} (mod {p})"))
                .witness(json!({ "v": v, "w": w }))
        }
        None => {
            let (u, v, w) = corollary_witness(p)?;
            Report::new("witness", format!("{u}^2 + {v}^2 + 1 = {w} * {p}"))
                .witness(json!({ "u": u, "v": v, "w": w }))
        }
    })
}

fn run_spec(show: Option<&str>, expr: Option<&str>) -> Result<Report> {
    let p = match (show, expr) {
        (Some(name), _) => builtin(name)?,
        (None, Some(e)) => flatten(e)?,
        (None, None) => bail!("give --show <name> or --flatten <expression>"),
    };
    let axioms: Vec<String> = p.axioms.iter().map(|e| e.to_string()).collect();
    let names = |s: &std::collections::BTreeSet<meadow_core::presentations::OpSymbol>| -> Vec<String> {
        s.iter().map(|o| o.name.clone()).collect()
    };
    Ok(Report::new("spec", p.to_string().trim_end().to_string())
        .value(p.name.clone())
        .extra("visible", names(&p.visible))
        .extra("hidden", names(&p.hidden))
        .extra("axioms", axioms))
}

fn run(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Eval { model, sig, term } => run_eval(model, sig.as_deref(), term),
        Command::Peval {
            variant,
            model,
            term,
        } => run_peval(variant, model, term),
        Command::Project { to, term } => run_project(*to, term),
        Command::Normalize { sig, term } => run_normalize(sig, term),
        Command::Decide { theory, lhs, rhs } => run_decide(theory, lhs, rhs),
        Command::Truth {
            logic,
            eq,
            conn,
            quant,
            variant,
            domain,
            model,
            formula,
        } => run_truth(TruthArgs {
            logic,
            eq: eq.as_deref(),
            conn: conn.as_deref(),
            quant: quant.as_deref(),
            variant,
            domain: domain.as_deref(),
            model,
            formula,
        }),
        Command::Classify {
            mode,
            vars_defined,
            term,
        } => run_classify(*mode, *vars_defined, term),
        Command::Comply {
            convention,
            mode,
            term,
        } => run_comply(convention, *mode, term),
        Command::CheckModel {
            zp,
            modulus,
            axioms,
        } => run_check_model(*zp, *modulus, axioms),
        Command::Witness { prime, residue } => run_witness(*prime, *residue),
        Command::Spec { show, flatten } => run_spec(show.as_deref(), flatten.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let mut out = std::io::stdout().lock();
            let _ = writeln!(out, "{}", report.render(cli.json));
            ExitCode::from(report.exit)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
