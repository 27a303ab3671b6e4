use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use omegalab::checks::{self, CheckContext, CheckReport};
use omegalab::error::Error;
use omegalab::json as render_json;
use omegalab::omega;
use omegalab::specht;
use omegalab::tableau::{enumerate_tableaux, hook_length_count};
use omegalab::units::{jucys_murphy, ShapeUnits};
use omegalab::{AlgebraElement, Partition, Permutation, StandardTableau};

#[derive(Parser)]
#[command(
    name = "omegalab",
    version,
    about = "Exact workbench for Young's matrix units and quasi-idempotents with polynomial coefficients"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// List the standard tableaux of a shape given by column lengths
    Tabs {
        /// column lengths, e.g. 3,2
        #[arg(long)]
        lambda: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the orthogonal matrix unit e_{t,u}
    Unit {
        #[arg(long)]
        lambda: String,
        /// row tableau as a column word, e.g. 1,2,4|3,5
        #[arg(long)]
        t: String,
        /// column tableau as a column word; defaults to t
        #[arg(long)]
        u: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the central idempotent of a shape
    Central {
        #[arg(long)]
        lambda: String,
        /// optional size cross-check; must equal the weight of lambda
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the Jucys-Murphy element X_k in S_n
    Jm {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the Specht and Young polynomial bases of a shape
    Specht {
        #[arg(long)]
        lambda: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Build Omega_lambda; optionally run verifications against it
    Omega {
        #[arg(long)]
        lambda: String,
        /// comma-separated subset of quasi,decomp,symmetry,eq1,g,codepoly
        #[arg(long)]
        verify: Option<String>,
        /// allow the expensive paths
        #[arg(long)]
        slow: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Staircase specialization of Omega_lambda and its unit proportionality
    Gmap {
        #[arg(long)]
        lambda: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Code polynomial of the specialized element (or its conjugate by the
    /// longest permutation)
    Codepoly {
        #[arg(long)]
        lambda: String,
        /// transform omega g omega instead of g
        #[arg(long)]
        conjugate: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the full verification battery
    Selftest {
        /// largest group size, between 2 and 7
        #[arg(long = "max-n", default_value_t = 4)]
        max_n: usize,
        /// include the expensive identities (|lambda| = 6, n = 7 codepoly)
        #[arg(long)]
        slow: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("{e}");
            2
        }
    });
}

fn check_report_json(r: &CheckReport) -> serde_json::Value {
    json!({
        "name": r.name,
        "passed": r.passed,
        "millis": r.millis as u64,
        "details": r.details,
    })
}

fn run(cli: Cli) -> Result<i32, Error> {
    match cli.command {
        Command::Tabs { lambda, format } => {
            let lambda: Partition = lambda.parse()?;
            let tabs = enumerate_tableaux(&lambda);
            match format {
                Format::Text => {
                    for t in &tabs {
                        println!("{t}");
                    }
                    println!(
                        "count: {} (hook formula: {})",
                        tabs.len(),
                        hook_length_count(&lambda)
                    );
                }
                Format::Json => {
                    let value = json!({
                        "lambda": render_json::partition_json(&lambda),
                        "tableaux": tabs.iter().map(render_json::tableau_json).collect::<Vec<_>>(),
                        "count": tabs.len(),
                        "hook_count": hook_length_count(&lambda),
                    });
                    println!("{}", serde_json::to_string_pretty(&value).unwrap());
                }
            }
            Ok(0)
        }
        Command::Unit {
            lambda,
            t,
            u,
            format,
        } => {
            let lambda: Partition = lambda.parse()?;
            let t: StandardTableau = t.parse()?;
            let u: StandardTableau = match u {
                Some(u) => u.parse()?,
                None => t.clone(),
            };
            let su = ShapeUnits::new(lambda);
            let e = su.unit(&t, &u)?;
            print_element(&e, format);
            Ok(0)
        }
        Command::Central { lambda, n, format } => {
            let lambda: Partition = lambda.parse()?;
            if let Some(n) = n {
                if n != lambda.weight() {
                    return Err(Error::Usage(format!(
                        "--n {n} does not match the weight {} of {lambda}",
                        lambda.weight()
                    )));
                }
            }
            let e = ShapeUnits::new(lambda).central()?;
            print_element(&e, format);
            Ok(0)
        }
        Command::Jm { n, k, format } => {
            let e = jucys_murphy(n, k)?;
            print_element(&e, format);
            Ok(0)
        }
        Command::Specht { lambda, format } => {
            let lambda: Partition = lambda.parse()?;
            let tabs = enumerate_tableaux(&lambda);
            match format {
                Format::Text => {
                    for t in &tabs {
                        println!("tableau: {t}");
                        println!("  specht: {}", specht::specht_polynomial(t)?);
                        println!("  young:  {}", specht::young_polynomial(t)?);
                    }
                }
                Format::Json => {
                    let mut items = Vec::new();
                    for t in &tabs {
                        items.push(json!({
                            "tableau": render_json::tableau_json(t),
                            "specht": render_json::polynomial_json(&specht::specht_polynomial(t)?),
                            "young": render_json::polynomial_json(&specht::young_polynomial(t)?),
                        }));
                    }
                    let value = json!({
                        "lambda": render_json::partition_json(&lambda),
                        "basis": items,
                    });
                    println!("{}", serde_json::to_string_pretty(&value).unwrap());
                }
            }
            Ok(0)
        }
        Command::Omega {
            lambda,
            verify,
            slow,
            format,
        } => {
            let lambda: Partition = lambda.parse()?;
            let Some(verify) = verify else {
                let om = omega::omega(&lambda)?;
                print_element(&om, format);
                return Ok(0);
            };

            let tokens: Vec<&str> = verify
                .split(',')
                .map(|t| t.trim())
                .filter(|t| !t.is_empty())
                .collect();
            let allowed = ["quasi", "decomp", "symmetry", "eq1", "g", "codepoly"];
            for token in &tokens {
                if !allowed.contains(token) {
                    return Err(Error::Usage(format!(
                        "unknown verification '{token}'; choose from {}",
                        allowed.join(",")
                    )));
                }
            }

            let ctx = CheckContext::single_shape(lambda.clone(), slow);
            let mut quasi_idempotent = None;
            let mut scale = None;
            let mut decomposition_ok = None;
            let mut invariance_ok = None;
            let mut alternation_ok = None;
            let mut reports = Vec::new();
            for token in &tokens {
                match *token {
                    "quasi" => {
                        let r = omega::verify_quasi_idempotent(&lambda)?;
                        quasi_idempotent = Some(r.ok);
                        scale = Some(r.scale.clone());
                        let mut details =
                            vec![format!("measured scale: {}", r.scale)];
                        if let Some(f) = &r.failure {
                            details.push(f.clone());
                        }
                        reports.push(CheckReport {
                            name: "quasi",
                            passed: r.ok,
                            details,
                            millis: 0,
                        });
                    }
                    "decomp" => {
                        let r = omega::verify_decomposition(&lambda)?;
                        decomposition_ok = Some(r.ok());
                        reports.push(CheckReport {
                            name: "decomp",
                            passed: r.ok(),
                            details: r.failure.clone().into_iter().collect(),
                            millis: 0,
                        });
                    }
                    "symmetry" => {
                        let r = omega::verify_symmetries(&lambda, lambda.weight() <= 5)?;
                        invariance_ok = Some(r.invariance);
                        alternation_ok = Some(r.alternation);
                        let mut details = Vec::new();
                        if let Some(nu) = &r.isotype {
                            details.push(format!("measured isotype: {nu}"));
                        }
                        if let Some(f) = &r.failure {
                            details.push(f.clone());
                        }
                        reports.push(CheckReport {
                            name: "symmetry",
                            passed: r.ok(),
                            details,
                            millis: 0,
                        });
                    }
                    name => {
                        let check = checks::find(name)
                            .ok_or_else(|| Error::Usage(format!("unknown check {name}")))?;
                        reports.push(check.run(&ctx));
                    }
                }
            }

            let passed = reports.iter().all(|r| r.passed);
            match format {
                Format::Text => {
                    for r in &reports {
                        r.print();
                    }
                }
                Format::Json => {
                    let value = json!({
                        "lambda": render_json::partition_json(&lambda),
                        "quasi_idempotent": quasi_idempotent,
                        "scale": scale.as_ref().map(render_json::polynomial_json),
                        "decomposition_ok": decomposition_ok,
                        "invariance_ok": invariance_ok,
                        "alternation_ok": alternation_ok,
                        "checks": reports.iter().map(check_report_json).collect::<Vec<_>>(),
                    });
                    println!("{}", serde_json::to_string_pretty(&value).unwrap());
                }
            }
            Ok(if passed { 0 } else { 1 })
        }
        Command::Gmap { lambda, format } => {
            let lambda: Partition = lambda.parse()?;
            let r = omega::specialized_g(&lambda)?;
            match format {
                Format::Text => {
                    println!("g = {}", r.g);
                    println!("kappa (g = kappa e_(tr,tc)): {}", r.kappa);
                    if let Some(z) = r.square_is_zero {
                        println!("g*g = 0: {z}");
                    } else {
                        println!("tr = tc: single-tableau shape");
                    }
                    println!(
                        "word tr -> tc: {:?}, quasi constant of w*g: {}",
                        r.word, r.quasi_constant
                    );
                    println!("ok: {}", r.ok());
                }
                Format::Json => {
                    let value = json!({
                        "lambda": render_json::partition_json(&r.lambda),
                        "g": render_json::element_json(&r.g),
                        "kappa": render_json::scalar_json(&r.kappa),
                        "kappa_text": r.kappa.to_string(),
                        "proportional_to_unit": r.proportional,
                        "square_is_zero": r.square_is_zero,
                        "word": r.word,
                        "quasi_constant": r.quasi_constant.to_string(),
                        "ok": r.ok(),
                        "failure": r.failure,
                    });
                    println!("{}", serde_json::to_string_pretty(&value).unwrap());
                }
            }
            Ok(if r.ok() { 0 } else { 1 })
        }
        Command::Codepoly {
            lambda,
            conjugate,
            format,
        } => {
            let lambda: Partition = lambda.parse()?;
            let n = lambda.weight();
            let g = specht::specialize_element(&omega::omega(&lambda)?, &lambda.conjugate())?;
            let element = if conjugate {
                let w = AlgebraElement::from_perm(Permutation::longest(n));
                w.mul(&g).mul(&w)
            } else {
                g
            };
            let code = omega::code_polynomial(&element)?;
            match format {
                Format::Text => println!("{code}"),
                Format::Json => {
                    let value = json!({
                        "lambda": render_json::partition_json(&lambda),
                        "conjugated": conjugate,
                        "terms": code.num_terms(),
                        "polynomial": render_json::polynomial_json(&code),
                    });
                    println!("{}", serde_json::to_string_pretty(&value).unwrap());
                }
            }
            Ok(0)
        }
        Command::Selftest {
            max_n,
            slow,
            format,
        } => {
            if !(2..=7).contains(&max_n) {
                return Err(Error::Usage(format!(
                    "--max-n must lie between 2 and 7, got {max_n}"
                )));
            }
            let ctx = CheckContext::battery(max_n, slow);
            let reports = checks::run_battery(&ctx);
            let passed = reports.iter().all(|r| r.passed);
            match format {
                Format::Text => {
                    for r in &reports {
                        r.print();
                    }
                    println!(
                        "selftest (max_n={max_n}, slow={slow}): {}",
                        if passed { "all checks passed" } else { "FAILURES" }
                    );
                }
                Format::Json => {
                    let value = json!({
                        "max_n": max_n,
                        "slow": slow,
                        "ok": passed,
                        "checks": reports.iter().map(check_report_json).collect::<Vec<_>>(),
                    });
                    println!("{}", serde_json::to_string_pretty(&value).unwrap());
                }
            }
            Ok(if passed { 0 } else { 1 })
        }
    }
}

fn print_element(e: &AlgebraElement, format: Format) {
    match format {
        Format::Text => println!("{e}"),
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&render_json::element_json(e)).unwrap()
        ),
    }
}
