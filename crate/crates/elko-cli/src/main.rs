//! `elko`: JSON command-line front end for the spinor classification and
//! Dirac-to-ELKO mapping library.

mod format;

use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use elko_core::bilinears::{compute_bilinears, fierz_aggregate, fierz_residuals};
use elko_core::classifier::{classify, is_regular, LounestoClass, ToleranceConfig};
use elko_core::elko::{charge_conjugate, elko, elko_dual, dual_pairing, Momentum};
use elko_core::mapping::{
    ansatz_m, build_m, compare_modes, direct_conditions, mapped_bilinears, paper_conditions,
    ConstraintReport, FreeParams, Mode,
};
use elko_core::multivector::Multivector;
use elko_core::sampler::{sample_class, sample_mappable, SampleSpec};
use elko_core::Complex64;

use format::{label_spec, read_param_file, read_spinor_file, SpinorFile};

#[derive(Debug)]
pub struct CliError {
    msg: String,
    code: i32,
}

impl CliError {
    fn validation(msg: impl Into<String>) -> Self {
        Self {
            msg: msg.into(),
            code: 2,
        }
    }

    fn compute(msg: impl Into<String>) -> Self {
        Self {
            msg: msg.into(),
            code: 3,
        }
    }
}

fn core_err(e: elko_core::Error) -> CliError {
    use elko_core::Error as E;
    match e {
        E::NoConvergence { .. }
        | E::SingularOperator { .. }
        | E::ExhaustedRetries { .. }
        | E::WrongClass { .. }
        | E::NonRealBilinear { .. }
        | E::DivisionDegenerate { .. } => CliError::compute(e.to_string()),
        _ => CliError::validation(e.to_string()),
    }
}

#[derive(Parser)]
#[command(
    name = "elko",
    version,
    about = "Bilinear covariants, Lounesto classification, ELKO spinors and the Dirac-to-ELKO mapping"
)]
struct Cli {
    /// Relative tolerance for all approximate comparisons.
    #[arg(long, global = true, default_value_t = 1e-10)]
    tolerance: f64,

    /// Seed for every random draw (solver restarts, sampling).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Compact single-line JSON without timing information.
    #[arg(long, global = true, default_value_t = false)]
    quiet: bool,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Bilinear covariants, Fierz residuals and the Lounesto class of a spinor.
    Classify { file: String },
    /// Generate an ELKO spinor file for a label and momentum.
    ElkoGen {
        /// Conjugacy type: S (self-conjugate) or A (anti self-conjugate).
        #[arg(long = "type")]
        conjugacy: String,
        /// Helicity pair: mp or pm.
        #[arg(long)]
        pair: String,
        #[arg(long)]
        mass: f64,
        /// Spatial momentum as "px,py,pz".
        #[arg(long, default_value = "0,0,0", allow_hyphen_values = true)]
        p: String,
    },
    /// Check the charge-conjugation eigenvalue, class membership and dual pairing.
    ElkoVerify { file: String },
    /// Apply the mapping operator to a spinor.
    MapApply {
        file: String,
        /// Sign of the antilinear block: +1 or -1.
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        epsilon: i64,
        /// Parameter file overriding the fixing ansatz.
        #[arg(long)]
        params: Option<String>,
    },
    /// Evaluate the mappability conditions for a class.
    MapCheck {
        file: String,
        #[arg(long)]
        class: u8,
        /// paper, direct or both.
        #[arg(long, default_value = "both")]
        mode: String,
    },
    /// Solve the constraint system for a mappable spinor.
    MapSolve {
        #[arg(long)]
        class: u8,
        /// paper or direct.
        #[arg(long)]
        mode: String,
        /// Free parameters: "re,im" for class 1, "psi1a,psi1b,psi2a" for classes 2/3.
        #[arg(long, allow_hyphen_values = true)]
        free: String,
    },
    /// Emit spinor files of a Lounesto class, one JSON object per line.
    Sample {
        #[arg(long)]
        class: u8,
        #[arg(long)]
        count: usize,
        /// Restrict to mappable spinors (classes 1-3) found by the solver.
        #[arg(long, default_value_t = false)]
        mappable: bool,
        /// Constraint mode when --mappable is set: paper or direct.
        #[arg(long, default_value = "direct")]
        mode: String,
    },
    /// Fierz residuals and the P/Q/Z aggregates of a spinor.
    Fierz { file: String },
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(cli) {
        eprintln!("error: {}", e.msg);
        std::process::exit(e.code);
    }
}

fn parse_mode(s: &str) -> Result<Mode, CliError> {
    match s {
        "paper" => Ok(Mode::Paper),
        "direct" => Ok(Mode::Direct),
        other => Err(CliError::validation(format!(
            "mode: expected \"paper\" or \"direct\", got \"{other}\""
        ))),
    }
}

fn parse_vec3(s: &str) -> Result<[f64; 3], CliError> {
    let parts: Vec<_> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(CliError::validation(format!(
            "p: expected \"px,py,pz\", got \"{s}\""
        )));
    }
    let mut out = [0.0; 3];
    for (i, part) in parts.iter().enumerate() {
        out[i] = part
            .trim()
            .parse::<f64>()
            .map_err(|e| CliError::validation(format!("p[{i}]: {e}")))?;
        if !out[i].is_finite() {
            return Err(CliError::validation(format!("p[{i}]: non-finite")));
        }
    }
    Ok(out)
}

fn class_value(class: LounestoClass) -> Value {
    match class.number() {
        Some(n) => json!(n),
        None => json!("degenerate"),
    }
}

fn bilinears_json(b: &elko_core::bilinears::BilinearSet) -> Value {
    json!({
        "sigma": b.sigma,
        "omega": b.omega,
        "j": b.j,
        "k": b.k,
        "s": b.s,
    })
}

fn multivector_json(m: &Multivector) -> Value {
    json!(m.coefficients().to_vec())
}

fn constraint_json(r: &ConstraintReport) -> Value {
    let named = |list: &Vec<(&'static str, f64)>| -> Value {
        let mut map = serde_json::Map::new();
        for (name, v) in list {
            map.insert((*name).into(), json!(v));
        }
        Value::Object(map)
    };
    json!({
        "mode": match r.mode { Mode::Paper => "paper", Mode::Direct => "direct" },
        "class": r.class,
        "residuals": named(&r.residuals),
        "extras": named(&r.extras),
        "mappable": r.mappable,
        "tolerance": r.tolerance,
    })
}

struct Printer {
    quiet: bool,
    tolerance: f64,
    started: Instant,
}

impl Printer {
    fn emit(&self, command: &str, mut body: Value) -> Result<(), CliError> {
        let obj = body.as_object_mut().expect("report body is an object");
        obj.insert("schema".into(), json!(1));
        obj.insert("command".into(), json!(command));
        obj.insert("tolerance".into(), json!(self.tolerance));
        if !self.quiet {
            obj.insert(
                "timing_ms".into(),
                json!(self.started.elapsed().as_secs_f64() * 1e3),
            );
        }
        self.print(&body)
    }

    fn print(&self, v: &Value) -> Result<(), CliError> {
        let text = if self.quiet {
            serde_json::to_string(v)
        } else {
            serde_json::to_string_pretty(v)
        }
        .map_err(|e| CliError::compute(e.to_string()))?;
        println!("{text}");
        Ok(())
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    if !(cli.tolerance > 0.0) || !cli.tolerance.is_finite() {
        return Err(CliError::validation("tolerance: must be positive and finite"));
    }
    let tol = ToleranceConfig::new(cli.tolerance);
    let out = Printer {
        quiet: cli.quiet,
        tolerance: cli.tolerance,
        started: Instant::now(),
    };
    match cli.cmd {
        Cmd::Classify { file } => {
            let psi = read_spinor_file(&file)?.spinor();
            let b = compute_bilinears(&psi).map_err(core_err)?;
            let class = classify(&b, &tol);
            out.emit(
                "classify",
                json!({
                    "bilinears": bilinears_json(&b),
                    "fierz_residuals": fierz_residuals(&b),
                    "class": class_value(class),
                    "regular": is_regular(&b),
                }),
            )
        }
        Cmd::ElkoGen {
            conjugacy,
            pair,
            mass,
            p,
        } => {
            if !(mass > 0.0) || !mass.is_finite() {
                return Err(CliError::validation("mass: must be positive and finite"));
            }
            let label = format::parse_label(&conjugacy, &pair)?;
            let mom = Momentum::new(mass, parse_vec3(&p)?);
            let lam = elko(label, &mom).map_err(core_err)?;
            let mut file = SpinorFile::from_spinor(&lam);
            file.momentum = Some(format::MomentumSpec { mass, p: mom.p });
            file.label = Some(label_spec(label));
            out.print(&serde_json::to_value(&file).unwrap())
        }
        Cmd::ElkoVerify { file } => {
            let f = read_spinor_file(&file)?;
            let lam = f.spinor();
            let scale = lam.norm_sqr().sqrt().max(1e-300);
            let c = charge_conjugate(&lam);
            let res_plus = c.max_dev(&lam) / scale;
            let res_minus = c.max_dev(&lam.scale(Complex64::new(-1.0, 0.0))) / scale;
            let (sign, c_residual) = if res_plus <= res_minus {
                (1i8, res_plus)
            } else {
                (-1i8, res_minus)
            };
            let b = compute_bilinears(&lam).map_err(core_err)?;
            let class = classify(&b, &tol);
            let eigen_ok = c_residual <= cli.tolerance.max(1e-12);
            let dual = match (f.elko_label()?, f.momentum()) {
                (Some(label), Some(mom)) => {
                    let partner = elko(label.dual_partner(), &mom).map_err(core_err)?;
                    let row = elko_dual(&partner, label).map_err(core_err)?;
                    let pairing = dual_pairing(&row, &lam);
                    json!({
                        "value": pairing.re,
                        "imag_residual": pairing.im,
                        "sign": if pairing.re >= 0.0 { 1 } else { -1 },
                    })
                }
                _ => Value::Null,
            };
            out.emit(
                "elko-verify",
                json!({
                    "c_eigen_sign": sign,
                    "c_residual": c_residual,
                    "class": class_value(class),
                    "is_class5": class == LounestoClass::Class5,
                    "dual_pairing": dual,
                    "verified": eigen_ok && class == LounestoClass::Class5,
                }),
            )
        }
        Cmd::MapApply {
            file,
            epsilon,
            params,
        } => {
            if epsilon != 1 && epsilon != -1 {
                return Err(CliError::validation("epsilon: must be +1 or -1"));
            }
            let f = read_spinor_file(&file)?;
            let psi = f.spinor();
            let mom = f.momentum().unwrap_or_else(|| Momentum::rest(1.0));
            let m = match params {
                Some(path) => build_m(
                    &read_param_file(&path)?.params(epsilon as f64)?,
                    &mom,
                ),
                None => ansatz_m(epsilon as f64, &mom),
            };
            let lam = m.apply(&psi);
            let ring = mapped_bilinears(&psi, &m);
            let mut outfile = SpinorFile::from_spinor(&lam);
            outfile.momentum = f.momentum;
            out.emit(
                "map-apply",
                json!({
                    "output_spinor": serde_json::to_value(&outfile).unwrap(),
                    "mapped_bilinears": bilinears_json(&ring),
                    "mapped_class": class_value(classify(&ring, &tol)),
                }),
            )
        }
        Cmd::MapCheck { file, class, mode } => {
            if !(1..=3).contains(&class) {
                return Err(CliError::validation("class: mappable classes are 1, 2 or 3"));
            }
            let f = read_spinor_file(&file)?;
            let psi = f.spinor();
            let body = match mode.as_str() {
                "both" => {
                    let cmp = compare_modes(&psi, class, &tol).map_err(core_err)?;
                    let agreements: Value = cmp
                        .agreements
                        .iter()
                        .map(|(name, ok)| ((*name).to_string(), json!(ok)))
                        .collect::<serde_json::Map<_, _>>()
                        .into();
                    json!({
                        "paper": constraint_json(&cmp.paper),
                        "direct": constraint_json(&cmp.direct),
                        "agreements": agreements,
                        "agree": cmp.agree,
                        "mappable": cmp.paper.mappable && cmp.direct.mappable,
                    })
                }
                other => {
                    let report = match parse_mode(other)? {
                        Mode::Paper => paper_conditions(&psi, class, &tol).map_err(core_err)?,
                        Mode::Direct => {
                            let mom = f.momentum().unwrap_or_else(|| Momentum::rest(1.0));
                            let m = ansatz_m(1.0, &mom);
                            direct_conditions(&psi, &m, class, &tol).map_err(core_err)?
                        }
                    };
                    json!({
                        "report": constraint_json(&report),
                        "mappable": report.mappable,
                    })
                }
            };
            out.emit("map-check", body)
        }
        Cmd::MapSolve { class, mode, free } => {
            if !(1..=3).contains(&class) {
                return Err(CliError::validation("class: mappable classes are 1, 2 or 3"));
            }
            let mode = parse_mode(&mode)?;
            let parts: Vec<f64> = free
                .split(',')
                .map(|s| s.trim().parse::<f64>())
                .collect::<Result<_, _>>()
                .map_err(|e| CliError::validation(format!("free: {e}")))?;
            let free = match (class, parts.as_slice()) {
                (1, [re, im]) => FreeParams::Psi1(Complex64::new(*re, *im)),
                (2 | 3, [psi1a, psi1b, psi2a]) => FreeParams::Components {
                    psi1a: *psi1a,
                    psi1b: *psi1b,
                    psi2a: *psi2a,
                },
                (1, _) => {
                    return Err(CliError::validation(
                        "free: class 1 takes \"re,im\" (the free component psi1)",
                    ))
                }
                _ => {
                    return Err(CliError::validation(
                        "free: classes 2/3 take \"psi1a,psi1b,psi2a\"",
                    ))
                }
            };
            let psi = elko_core::mapping::solve_equivalence_class(class, mode, free, cli.seed)
                .map_err(core_err)?;
            out.print(&serde_json::to_value(SpinorFile::from_spinor(&psi)).unwrap())
        }
        Cmd::Sample {
            class,
            count,
            mappable,
            mode,
        } => {
            let spinors = if mappable {
                if !(1..=3).contains(&class) {
                    return Err(CliError::validation(
                        "class: --mappable requires class 1, 2 or 3",
                    ));
                }
                sample_mappable(class, parse_mode(&mode)?, count, cli.seed).map_err(core_err)?
            } else {
                if !(1..=6).contains(&class) {
                    return Err(CliError::validation("class: Lounesto classes are 1..=6"));
                }
                sample_class(&SampleSpec::new(class, count, cli.seed)).map_err(core_err)?
            };
            for psi in spinors {
                let v = serde_json::to_value(SpinorFile::from_spinor(&psi)).unwrap();
                println!("{}", serde_json::to_string(&v).unwrap());
            }
            Ok(())
        }
        Cmd::Fierz { file } => {
            let psi = read_spinor_file(&file)?.spinor();
            let b = compute_bilinears(&psi).map_err(core_err)?;
            let agg = fierz_aggregate(&b);
            out.emit(
                "fierz",
                json!({
                    "bilinears": bilinears_json(&b),
                    "fierz_residuals": fierz_residuals(&b),
                    "aggregates": {
                        "p": multivector_json(&agg.p),
                        "q": multivector_json(&agg.q),
                        "z_re": multivector_json(&agg.z_re),
                        "z_im": multivector_json(&agg.z_im),
                    },
                }),
            )
        }
    }
}
