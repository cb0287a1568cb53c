//! The `alcove` command line: argument parsing, command dispatch and the
//! JSON / TSV envelope.

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

use alcove_core::characters::CharacterCache;
use alcove_core::modular::{classify, qdim, s_matrix};
use alcove_core::weyl::{make_context, AlcoveContext};
use alcove_core::{
    build_root_system_with, BuildOptions, CycNum, Error, LieType, RootSystem, Weight,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Debug, Parser)]
#[command(
    name = "alcove",
    version,
    about = "Exact alcove, fusion and modularity computations for quantum groups at roots of unity"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "json", global = true)]
    pub format: Format,
    /// Report timing_ms as 0 so output is byte-reproducible.
    #[arg(long, global = true)]
    pub stable: bool,
    /// Numeric values are taken at s = exp(2 pi i residue / (l L)).
    #[arg(long, default_value_t = 1, global = true, allow_hyphen_values = true)]
    pub residue: i64,
    /// Largest accepted rank.
    #[arg(long, default_value_t = alcove_core::rootdata::DEFAULT_MAX_RANK, global = true)]
    pub max_rank: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Constants, Cartan matrix and positive roots of a type.
    Info { lie_type: String },
    /// The Weyl alcove at order l.
    Alcove { lie_type: String, l: u64 },
    /// Dominant character of an irreducible module.
    Mult { lie_type: String, lambda: String },
    /// Classical tensor product decomposition.
    Tensor {
        lie_type: String,
        lambda: String,
        gamma: String,
    },
    /// Truncated tensor product coefficients at order l.
    Fuse {
        lie_type: String,
        l: u64,
        lambda: String,
        gamma: String,
    },
    /// Quantum dimension at order l.
    Qdim {
        lie_type: String,
        l: u64,
        lambda: String,
    },
    /// Unnormalized S-matrix at order l.
    Smatrix { lie_type: String, l: u64 },
    /// Modularity classification at order l.
    Classify { lie_type: String, l: u64 },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Info { .. } => "info",
            Command::Alcove { .. } => "alcove",
            Command::Mult { .. } => "mult",
            Command::Tensor { .. } => "tensor",
            Command::Fuse { .. } => "fuse",
            Command::Qdim { .. } => "qdim",
            Command::Smatrix { .. } => "smatrix",
            Command::Classify { .. } => "classify",
        }
    }
}

/// The single document printed by every successful invocation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Envelope {
    pub schema_version: String,
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub timing_ms: u64,
}

/// Exit code for a core error: 2 for bad input, 3 for an invalid root of
/// unity, 4 for a failed internal check.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidContext { .. } => 3,
        Error::SelfCheck(_) | Error::RingMismatch { .. } => 4,
        _ => 2,
    }
}

/// Outcome of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parse `args` (including the program name) and run the command.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Output {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Output {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let start = Instant::now();
    match execute(&cli) {
        Ok((inputs, result)) => {
            let timing_ms = if cli.stable {
                0
            } else {
                start.elapsed().as_millis() as u64
            };
            let env = Envelope {
                schema_version: SCHEMA_VERSION.into(),
                command: cli.command.name().into(),
                inputs,
                result,
                timing_ms,
            };
            let stdout = match cli.format {
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&env).expect("envelope serializes");
                    s.push('\n');
                    s
                }
                Format::Tsv => to_tsv(&serde_json::to_value(&env).expect("envelope serializes")),
            };
            Output {
                code: 0,
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => {
            let code = exit_code(&e);
            Output {
                code,
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            }
        }
    }
}

/// Flatten a JSON document into `path<TAB>value` lines, one per leaf.
pub fn to_tsv(v: &Value) -> String {
    fn walk(prefix: &str, v: &Value, out: &mut String) {
        match v {
            Value::Object(map) => {
                if map.is_empty() {
                    out.push_str(&format!("{prefix}\t{{}}\n"));
                }
                for (k, x) in map {
                    let p = if prefix.is_empty() {
                        k.clone()
                    } else {
                        format!("{prefix}.{k}")
                    };
                    walk(&p, x, out);
                }
            }
            Value::Array(items) => {
                if items.is_empty() {
                    out.push_str(&format!("{prefix}\t[]\n"));
                }
                for (i, x) in items.iter().enumerate() {
                    walk(&format!("{prefix}.{i}"), x, out);
                }
            }
            Value::String(s) => {
                out.push_str(&format!("{prefix}\t{}\n", s.replace(['\t', '\n'], " ")))
            }
            other => out.push_str(&format!("{prefix}\t{other}\n")),
        }
    }
    let mut out = String::from("path\tvalue\n");
    walk("", v, &mut out);
    out
}

fn root_system(cli: &Cli, t: &str) -> Result<Arc<RootSystem>, Error> {
    let t: LieType = t.parse()?;
    Ok(Arc::new(build_root_system_with(
        t,
        BuildOptions {
            max_rank: cli.max_rank,
        },
    )?))
}

fn context(cli: &Cli, t: &str, l: u64) -> Result<AlcoveContext, Error> {
    make_context(root_system(cli, t)?, l)
}

fn weight(rs: &RootSystem, s: &str) -> Result<Weight, Error> {
    let w: Weight = s.parse()?;
    rs.check_rank(&w)?;
    if !w.is_dominant() {
        return Err(Error::Parse {
            what: "weight (nonnegative integers expected)",
            input: s.to_string(),
        });
    }
    Ok(w)
}

fn complex(z: alcove_core::Complex64) -> Value {
    // tiny residues from the embedding print as exact zeros
    let clean = |x: f64| if x.abs() < 1e-12 { 0.0 } else { x };
    json!({ "re": clean(z.re), "im": clean(z.im) })
}

fn cyc(x: &CycNum, residue: i64) -> Result<Value, Error> {
    Ok(json!({
        "exact": x,
        "numeric": complex(x.embed_numeric(residue)?),
        "is_zero": x.is_zero(),
    }))
}

fn weight_map<V: Serialize>(m: &BTreeMap<Weight, V>) -> Value {
    let obj: serde_json::Map<String, Value> = m
        .iter()
        .map(|(k, v)| {
            (
                k.to_string(),
                serde_json::to_value(v).expect("serializable"),
            )
        })
        .collect();
    Value::Object(obj)
}

fn execute(cli: &Cli) -> Result<(Value, Value), Error> {
    let residue = cli.residue;
    match &cli.command {
        Command::Info { lie_type } => {
            let rs = root_system(cli, lie_type)?;
            let roots: Vec<Value> = rs
                .positive_roots()
                .iter()
                .map(|b| json!({ "simple_coords": b.simple_coords, "weight": b.weight, "long": b.is_long() }))
                .collect();
            let c = rs.constants();
            let result = json!({
                "lie_type": rs.lie_type(),
                "rank": rs.rank(),
                "constants": { "L": c.l, "D": c.d, "h": c.h, "hv": c.hv },
                "cartan": rs.cartan(),
                "d": rs.d(),
                "gram_L": rs.gram_l(),
                "rho": rs.rho(),
                "theta": rs.theta().weight,
                "phi": rs.phi().weight,
                "positive_roots": roots,
                "weyl_group_order": rs.weyl_group_order().to_string(),
            });
            Ok((json!({ "type": rs.lie_type() }), result))
        }
        Command::Alcove { lie_type, l } => {
            let ctx = context(cli, lie_type, *l)?;
            let alcove = ctx.alcove_weights();
            let result = json!({
                "l": ctx.l(),
                "l_prime": ctx.l_prime(),
                "l_i": ctx.l_i(),
                "l_i_prime": ctx.l_i_prime(),
                "d_divides_l_prime": ctx.d_divides(),
                "theta0": ctx.theta0().weight,
                "m_generators": ctx.m_generators(),
                "size": alcove.len(),
                "alcove": alcove,
            });
            Ok((json!({ "type": lie_type.to_uppercase(), "l": l }), result))
        }
        Command::Mult { lie_type, lambda } => {
            let rs = root_system(cli, lie_type)?;
            let lam = weight(&rs, lambda)?;
            let cache = CharacterCache::new(rs.clone());
            let ch = cache.character(&lam)?;
            let mults: BTreeMap<Weight, u64> = ch.mults.clone();
            let result = json!({
                "highest": lam,
                "dimension": ch.dimension(&rs).to_string(),
                "dominant_multiplicities": weight_map(&mults),
            });
            Ok((json!({ "type": rs.lie_type(), "lambda": lam }), result))
        }
        Command::Tensor {
            lie_type,
            lambda,
            gamma,
        } => {
            let rs = root_system(cli, lie_type)?;
            let lam = weight(&rs, lambda)?;
            let gam = weight(&rs, gamma)?;
            let n = alcove_core::characters::classical_tensor(&rs, &lam, &gam)?;
            Ok((
                json!({ "type": rs.lie_type(), "lambda": lam, "gamma": gam }),
                weight_map(&n),
            ))
        }
        Command::Fuse {
            lie_type,
            l,
            lambda,
            gamma,
        } => {
            let ctx = context(cli, lie_type, *l)?;
            let lam = weight(ctx.root_system(), lambda)?;
            let gam = weight(ctx.root_system(), gamma)?;
            let engine = alcove_core::FusionEngine::new(ctx);
            let m = engine.fusion_coeffs(&lam, &gam)?;
            Ok((
                json!({ "type": lie_type.to_uppercase(), "l": l, "lambda": lam, "gamma": gam }),
                weight_map(&m),
            ))
        }
        Command::Qdim {
            lie_type,
            l,
            lambda,
        } => {
            let ctx = context(cli, lie_type, *l)?;
            let lam = weight(ctx.root_system(), lambda)?;
            let q = qdim(&ctx, &lam)?;
            let mut result = cyc(&q, residue)?;
            result["weight"] = json!(lam);
            Ok((
                json!({ "type": lie_type.to_uppercase(), "l": l, "lambda": lam, "residue": residue }),
                result,
            ))
        }
        Command::Smatrix { lie_type, l } => {
            let ctx = context(cli, lie_type, *l)?;
            let s = s_matrix(&ctx)?;
            let numeric = s
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|x| x.embed_numeric(residue).map(complex))
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()?;
            let result = json!({
                "alcove": ctx.alcove_weights(),
                "exact": s,
                "numeric": numeric,
            });
            Ok((
                json!({ "type": lie_type.to_uppercase(), "l": l, "residue": residue }),
                result,
            ))
        }
        Command::Classify { lie_type, l } => {
            let ctx = context(cli, lie_type, *l)?;
            let report = classify(&ctx)?;
            Ok((
                json!({ "type": lie_type.to_uppercase(), "l": l }),
                serde_json::to_value(&report).expect("report serializes"),
            ))
        }
    }
}
