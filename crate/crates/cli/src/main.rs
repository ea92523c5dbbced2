//! Command-line interface: algebra validation, products, Gröbner bases,
//! membership, colon ideals, syzygies, cone decompositions, Hilbert data,
//! degree bounds, two-sided bases, corpus generation, and the bound
//! verification harness.
//!
//! Exit codes: 0 success, 2 algebra validation failure, 3 parse error,
//! 4 semantic error, 5 verification violation.

mod corpus;
mod formats;

use std::fmt::Write as _;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::json;
use solvable_core::algebra::{
    preset_commutative, preset_nonabelian2, preset_weyl, SolvableAlgebra,
};
use solvable_core::bounds::{
    self, dube_bound, homogeneous_gb_bound, membership_bound, reduced_gb_bound,
    reduction_degree_bound, syzygy_bound, two_sided_bound, BoundValue, VerifyOptions,
};
use solvable_core::cone::{
    hilbert_from_decomposition, macaulay_constants, make_exact, split, split_complement,
    ExactifyPolicy,
};
use solvable_core::envelope::{is_two_sided_gb, two_sided_groebner};
use solvable_core::groebner::{
    buchberger, hilbert_function_quotient, is_groebner, reduce_basis, Membership,
};
use solvable_core::monomial::VarSet;
use solvable_core::parse::{parse_poly, poly_to_string};
use solvable_core::poly::Polynomial;
use solvable_core::syzygy::{
    colon_ideal, ideal_direct_decomposition, syzygies_of_tuple, IdealComponent,
};
use solvable_core::Error;

use formats::{
    decomposition_to_desc, parse_monomial, AlgebraDesc, ConeDesc, CorpusFile,
    OrderDesc,
};

#[derive(Parser)]
#[command(name = "solvable", version, about = "Gröbner bases and degree bounds in algebras of solvable type")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Report wall-clock time on stderr (stdout stays deterministic).
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Validate an algebra description and print its flags.
    CheckAlgebra(AlgebraArgs),
    /// Normal form of a product f . g.
    Multiply {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
    },
    /// Reduced Gröbner basis of the left ideal of the generators.
    Groebner {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long)]
        gens: String,
    },
    /// Reduce a set that is already a Gröbner basis.
    Reduce {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long)]
        gens: String,
    },
    /// Ideal membership with a cofactor certificate.
    Membership {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long)]
        gens: String,
        #[arg(long)]
        f: String,
    },
    /// Reduced basis of the colon ideal (I : f).
    Colon {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long)]
        i: String,
        #[arg(long)]
        f: String,
    },
    /// Generators of the left syzygy module of a tuple.
    Syzygy {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long)]
        gens: String,
    },
    /// Direct-sum decomposition of a left ideal via colon ideals.
    DecomposeIdeal {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long)]
        gens: String,
    },
    /// SPLIT a monomial cone relative to a monomial ideal.
    Split {
        #[command(flatten)]
        algebra: AlgebraArgs,
        /// apex monomial, e.g. "x1*x2^2" or "1"
        #[arg(long)]
        w: String,
        /// comma-separated variable names spanning the cone
        #[arg(long)]
        y: String,
        /// comma-separated monomial generators of (I : w)
        #[arg(long)]
        f: String,
    },
    /// Cone decompositions of the leading-monomial ideal and its
    /// normal-form complement.
    Decompose {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long)]
        gens: String,
    },
    /// Macaulay constants of the normal-form space of the ideal.
    Macaulay {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long)]
        gens: String,
    },
    /// Hilbert function of R/I for a homogeneous ideal.
    Hilbert {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long)]
        gens: String,
        #[arg(long, default_value_t = 8)]
        d: usize,
    },
    /// Hilbert data read off the normal-form cone decomposition.
    HilbertDecomp {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long)]
        gens: String,
        #[arg(long, default_value_t = 10)]
        d: usize,
    },
    /// Evaluate a degree-bound formula exactly.
    Bounds {
        #[arg(long)]
        formula: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 0)]
        deg_f: usize,
        /// "deglex" (degree-compatible) or "lex" (general case)
        #[arg(long, default_value = "deglex")]
        order: String,
    },
    /// Two-sided Gröbner basis via the enveloping algebra.
    TwoSidedGroebner {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long)]
        gens: String,
    },
    /// Run the degree-bound harness over a corpus file.
    Verify {
        #[arg(long)]
        corpus: std::path::PathBuf,
        /// Force the two-sided checks on every instance.
        #[arg(long)]
        two_sided: bool,
    },
    /// Generate a reproducible instance corpus.
    GenCorpus {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: Option<std::path::PathBuf>,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, default_value_t = 3)]
        max_d: usize,
        #[arg(long, default_value_t = 4)]
        max_gens: usize,
    },
}

#[derive(clap::Args)]
struct AlgebraArgs {
    /// "commutative:N", "weyl:N", "nonabelian2", or a path to a JSON
    /// algebra description.
    #[arg(long)]
    algebra: String,
    /// Ordering literal ("lex", "deglex", or JSON); overrides the file.
    #[arg(long)]
    order: Option<String>,
}

impl AlgebraArgs {
    fn build(&self) -> Result<SolvableAlgebra, CliError> {
        let order = match &self.order {
            Some(o) => Some(
                OrderDesc::from_cli(o)
                    .map_err(CliError::parse)?
                    .to_ordering()
                    .map_err(CliError::parse)?,
            ),
            None => None,
        };
        let deglex = solvable_core::ordering::MonomialOrdering::DegLex;
        if let Some(rest) = self.algebra.strip_prefix("commutative:") {
            let n: usize = rest.parse().map_err(|_| CliError::parse("bad variable count"))?;
            return Ok(preset_commutative(n, order.unwrap_or(deglex)));
        }
        if let Some(rest) = self.algebra.strip_prefix("weyl:") {
            let n: usize = rest.parse().map_err(|_| CliError::parse("bad variable count"))?;
            return preset_weyl(n, order.unwrap_or(deglex)).map_err(CliError::from);
        }
        if self.algebra == "nonabelian2" {
            return Ok(preset_nonabelian2(order.unwrap_or(deglex)));
        }
        let text = std::fs::read_to_string(&self.algebra)
            .map_err(|e| CliError::parse(format!("cannot read '{}': {e}", self.algebra)))?;
        let mut desc: AlgebraDesc = serde_json::from_str(&text)
            .map_err(|e| CliError::parse(format!("bad algebra JSON: {e}")))?;
        if let Some(o) = &self.order {
            desc.order = OrderDesc::from_cli(o).map_err(CliError::parse)?;
        }
        desc.build().map_err(CliError::from)
    }
}

/// Error with its process exit code.
struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn parse(m: impl Into<String>) -> Self {
        CliError { code: 3, message: m.into() }
    }

    fn semantic(m: impl Into<String>) -> Self {
        CliError { code: 4, message: m.into() }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Parse { .. } => 3,
            Error::NotSolvable { .. } | Error::FieldMismatch => 2,
            _ => 4,
        };
        CliError { code, message: e.to_string() }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let result = run(&cli);
    if cli.timing {
        eprintln!("elapsed: {:?}", start.elapsed());
    }
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn parse_gens(alg: &SolvableAlgebra, text: &str) -> Result<Vec<Polynomial>, CliError> {
    text.split(',')
        .map(|s| s.trim())
        .filter(|s| !s.is_empty())
        .map(|s| parse_poly(alg, s).map_err(CliError::from))
        .collect()
}

fn join_polys(alg: &SolvableAlgebra, polys: &[Polynomial]) -> String {
    polys.iter().map(|p| poly_to_string(alg, p)).collect::<Vec<_>>().join(", ")
}

fn run(cli: &Cli) -> Result<u8, CliError> {
    match &cli.command {
        Command::CheckAlgebra(args) => {
            let alg = args.build()?;
            let f = alg.flags();
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "vars": alg.names(),
                        "quadric": f.quadric,
                        "homogeneous": f.homogeneous,
                        "semi_commutative": f.semi_commutative,
                        "commutative": f.commutative,
                    })
                );
            } else {
                println!(
                    "valid: {} variables; quadric={} homogeneous={} semi-commutative={} commutative={}",
                    alg.nvars(),
                    f.quadric,
                    f.homogeneous,
                    f.semi_commutative,
                    f.commutative
                );
            }
            Ok(0)
        }
        Command::Multiply { algebra, f, g } => {
            let alg = algebra.build()?;
            let f = parse_poly(&alg, f).map_err(CliError::from)?;
            let g = parse_poly(&alg, g).map_err(CliError::from)?;
            let prod = alg.mul(&f, &g);
            emit_polys(cli, &alg, &[prod]);
            Ok(0)
        }
        Command::Groebner { algebra, gens } => {
            let alg = algebra.build()?;
            let gens = parse_gens(&alg, gens)?;
            let gb = reduce_basis(&alg, &buchberger(&alg, &gens, false));
            emit_polys(cli, &alg, &gb.elements);
            Ok(0)
        }
        Command::Reduce { algebra, gens } => {
            let alg = algebra.build()?;
            let gens = parse_gens(&alg, gens)?;
            if let Err((i, j, w)) = is_groebner(&alg, &gens) {
                return Err(CliError::semantic(format!(
                    "not a Gröbner basis: pair ({}, {}) leaves {}",
                    i + 1,
                    j + 1,
                    poly_to_string(&alg, &w)
                )));
            }
            let gb = reduce_basis(
                &alg,
                &solvable_core::groebner::GroebnerBasis {
                    elements: gens,
                    reduced: false,
                    certificates: None,
                },
            );
            emit_polys(cli, &alg, &gb.elements);
            Ok(0)
        }
        Command::Membership { algebra, gens, f } => {
            let alg = algebra.build()?;
            let gens = parse_gens(&alg, gens)?;
            let f = parse_poly(&alg, f).map_err(CliError::from)?;
            match solvable_core::groebner::membership(&alg, &gens, &f).map_err(CliError::from)? {
                Membership::Member { cofactors } => {
                    if cli.json {
                        println!(
                            "{}",
                            json!({
                                "member": true,
                                "cofactors": cofactors.iter().map(|p| poly_to_string(&alg, p)).collect::<Vec<_>>(),
                            })
                        );
                    } else {
                        println!("member");
                        for (p, g) in cofactors.iter().zip(gens.iter()) {
                            println!("  ({}) * ({})", poly_to_string(&alg, p), poly_to_string(&alg, g));
                        }
                    }
                }
                Membership::NotMember { witness } => {
                    if cli.json {
                        println!(
                            "{}",
                            json!({"member": false, "witness": poly_to_string(&alg, &witness)})
                        );
                    } else {
                        println!("not a member; witness {}", poly_to_string(&alg, &witness));
                    }
                }
            }
            Ok(0)
        }
        Command::Colon { algebra, i, f } => {
            let alg = algebra.build()?;
            let ideal = parse_gens(&alg, i)?;
            let f = parse_poly(&alg, f).map_err(CliError::from)?;
            let gb = colon_ideal(&alg, &ideal, &f).map_err(CliError::from)?;
            emit_polys(cli, &alg, &gb.elements);
            Ok(0)
        }
        Command::Syzygy { algebra, gens } => {
            let alg = algebra.build()?;
            let gens = parse_gens(&alg, gens)?;
            let syz = syzygies_of_tuple(&alg, &gens).map_err(CliError::from)?;
            if cli.json {
                let rows: Vec<Vec<String>> = syz
                    .generators
                    .iter()
                    .map(|row| row.iter().map(|p| poly_to_string(&alg, p)).collect())
                    .collect();
                println!("{}", json!({ "generators": rows }));
            } else {
                for row in &syz.generators {
                    println!("[{}]", join_polys(&alg, row));
                }
            }
            Ok(0)
        }
        Command::DecomposeIdeal { algebra, gens } => {
            let alg = algebra.build()?;
            let gens = parse_gens(&alg, gens)?;
            let comps = ideal_direct_decomposition(&alg, &gens).map_err(CliError::from)?;
            for c in &comps {
                match c {
                    IdealComponent::Principal { generator } => {
                        println!("principal: ({})", poly_to_string(&alg, generator));
                    }
                    IdealComponent::NormalFormSpace { colon_basis, factor } => {
                        println!(
                            "nf-space: colon basis [{}] * ({})",
                            join_polys(&alg, &colon_basis.elements),
                            poly_to_string(&alg, factor)
                        );
                    }
                }
            }
            Ok(0)
        }
        Command::Split { algebra, w, y, f } => {
            let alg = algebra.build()?;
            let w = parse_monomial(&alg, w).map_err(CliError::from)?;
            let yset = parse_varset(&alg, y)?;
            let gens: Result<Vec<_>, _> =
                f.split(',').map(|s| parse_monomial(&alg, s.trim())).collect();
            let gens = gens.map_err(CliError::from)?;
            let (p, q) = split(&w, yset, &gens, alg.nvars());
            let pd = solvable_core::cone::ConeDecomposition { nvars: alg.nvars(), cones: p };
            let qd = solvable_core::cone::ConeDecomposition { nvars: alg.nvars(), cones: q };
            emit_split(cli, &alg, &pd, &qd);
            Ok(0)
        }
        Command::Decompose { algebra, gens } => {
            let alg = algebra.build()?;
            let gens = parse_gens(&alg, gens)?;
            let gb = reduce_basis(&alg, &buchberger(&alg, &gens, false));
            let (p, q) = split_complement(&gb.leading_monomials(&alg), alg.nvars());
            emit_split(cli, &alg, &p, &q);
            Ok(0)
        }
        Command::Macaulay { algebra, gens } => {
            let alg = algebra.build()?;
            let gens = parse_gens(&alg, gens)?;
            let gb = reduce_basis(&alg, &buchberger(&alg, &gens, false));
            let (_, q) = split_complement(&gb.leading_monomials(&alg), alg.nvars());
            let (exact, constants) =
                make_exact(&q, ExactifyPolicy::PreferLargeDimension).map_err(CliError::from)?;
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "b": constants.b,
                        "decomposition": decomposition_to_desc(&alg, &exact),
                    })
                );
            } else {
                let bs: Vec<String> = constants.b.iter().map(|b| b.to_string()).collect();
                println!("b = ({})", bs.join(", "));
            }
            Ok(0)
        }
        Command::Hilbert { algebra, gens, d } => {
            let alg = algebra.build()?;
            let gens = parse_gens(&alg, gens)?;
            let gb = reduce_basis(&alg, &buchberger(&alg, &gens, false));
            let mut values = Vec::new();
            for k in 0..=*d {
                values.push(hilbert_function_quotient(&alg, &gb, k).map_err(CliError::from)?);
            }
            if cli.json {
                println!("{}", json!({ "quotient_hilbert": values }));
            } else {
                let vs: Vec<String> = values.iter().map(|v| v.to_string()).collect();
                println!("H(0..={d}) = {}", vs.join(", "));
            }
            Ok(0)
        }
        Command::HilbertDecomp { algebra, gens, d } => {
            let alg = algebra.build()?;
            let gens = parse_gens(&alg, gens)?;
            let gb = reduce_basis(&alg, &buchberger(&alg, &gens, false));
            let (_, q) = split_complement(&gb.leading_monomials(&alg), alg.nvars());
            let data = hilbert_from_decomposition(&q, d + 1);
            let constants = macaulay_constants(&q).map_err(CliError::from)?;
            if cli.json {
                let table: Vec<String> = data.table.iter().map(|v| v.to_string()).collect();
                println!(
                    "{}",
                    json!({
                        "table": table,
                        "polynomial": data.poly.to_display(),
                        "regularity": data.regularity,
                        "b": constants.b,
                    })
                );
            } else {
                let vs: Vec<String> =
                    data.table.iter().take(d + 1).map(|v| v.to_string()).collect();
                println!("H(0..={d}) = {}", vs.join(", "));
                println!("P(T) = {}", data.poly.to_display());
                println!("regularity = {}", data.regularity);
            }
            Ok(0)
        }
        Command::Bounds { formula, n, d, deg_f, order } => {
            let deg_compat = order != "lex";
            let value: BoundValue = match formula.as_str() {
                "dube" => BoundValue::from_rational(dube_bound(*n, *d)),
                "homogeneous-gb" => BoundValue::from_rational(homogeneous_gb_bound(*n, *d)),
                "reduced-gb" => reduced_gb_bound(*n, *d, deg_compat),
                "membership" => membership_bound(*n, *d, *deg_f, deg_compat),
                "reduction" => reduction_degree_bound(*n, *d, *deg_f),
                "syzygy" => BoundValue::from_rational(syzygy_bound(*n, *d)),
                "two-sided" => BoundValue::from_rational(two_sided_bound(*n, *d)),
                other => return Err(CliError::semantic(format!("unknown formula '{other}'"))),
            };
            if cli.json {
                println!("{}", json!({ "value": value.to_display() }));
            } else {
                println!("{}", value.to_display());
            }
            Ok(0)
        }
        Command::TwoSidedGroebner { algebra, gens } => {
            let alg = algebra.build()?;
            let gens = parse_gens(&alg, gens)?;
            let gb = two_sided_groebner(&alg, &gens).map_err(CliError::from)?;
            if !is_two_sided_gb(&alg, &gb.elements) {
                return Err(CliError::semantic("two-sided closure test failed".to_string()));
            }
            emit_polys(cli, &alg, &gb.elements);
            Ok(0)
        }
        Command::Verify { corpus, two_sided } => {
            let text = std::fs::read_to_string(corpus)
                .map_err(|e| CliError::parse(format!("cannot read corpus: {e}")))?;
            let corpus: CorpusFile = serde_json::from_str(&text)
                .map_err(|e| CliError::parse(format!("bad corpus JSON: {e}")))?;
            let mut all_ok = true;
            for inst in &corpus.instances {
                let alg = inst.algebra.build().map_err(CliError::from)?;
                let gens: Result<Vec<_>, _> =
                    inst.gens.iter().map(|g| parse_poly(&alg, g)).collect();
                let gens = gens.map_err(CliError::from)?;
                let options = VerifyOptions {
                    two_sided: *two_sided || inst.two_sided,
                    ..VerifyOptions::default()
                };
                let report =
                    bounds::verify_instance(&alg, &gens, &options).map_err(CliError::from)?;
                for check in &report.checks {
                    let status = if check.passed { "pass" } else { "FAIL" };
                    println!("{}/{}: {} ({})", inst.name, check.name, status, check.detail);
                    all_ok &= check.passed;
                }
            }
            Ok(if all_ok { 0 } else { 5 })
        }
        Command::GenCorpus { seed, out, max_n, max_d, max_gens } => {
            let limits =
                corpus::CorpusLimits { max_n: *max_n, max_d: *max_d, max_gens: *max_gens };
            let file = corpus::gen_corpus(*seed, &limits);
            let text =
                serde_json::to_string_pretty(&file).expect("corpus serialization cannot fail");
            match out {
                Some(path) => std::fs::write(path, text.as_bytes())
                    .map_err(|e| CliError::semantic(format!("cannot write corpus: {e}")))?,
                None => println!("{text}"),
            }
            Ok(0)
        }
    }
}

fn parse_varset(alg: &SolvableAlgebra, text: &str) -> Result<VarSet, CliError> {
    let mut indices = Vec::new();
    for name in text.split(',').map(|s| s.trim()).filter(|s| !s.is_empty()) {
        match alg.var_index(name) {
            Some(i) => indices.push(i),
            None => return Err(CliError::parse(format!("unknown variable '{name}'"))),
        }
    }
    VarSet::from_indices(&indices, alg.nvars()).map_err(CliError::from)
}

fn emit_polys(cli: &Cli, alg: &SolvableAlgebra, polys: &[Polynomial]) {
    if cli.json {
        let items: Vec<String> = polys.iter().map(|p| poly_to_string(alg, p)).collect();
        println!("{}", json!({ "polynomials": items }));
    } else {
        println!("{}", join_polys(alg, polys));
    }
}

fn emit_split(
    cli: &Cli,
    alg: &SolvableAlgebra,
    p: &solvable_core::cone::ConeDecomposition,
    q: &solvable_core::cone::ConeDecomposition,
) {
    if cli.json {
        println!(
            "{}",
            json!({
                "ideal_part": decomposition_to_desc(alg, p),
                "complement_part": decomposition_to_desc(alg, q),
                "complement_standard": q.d_standard(),
            })
        );
    } else {
        let fmt = |c: &ConeDesc| {
            let mut s = String::new();
            let _ = write!(s, "({}, {{{}}}, {})", c.w, c.y.join(", "), c.h);
            s
        };
        let pd: Vec<String> = decomposition_to_desc(alg, p).iter().map(fmt).collect();
        let qd: Vec<String> = decomposition_to_desc(alg, q).iter().map(fmt).collect();
        println!("P: {}", pd.join(" "));
        println!("Q: {}", qd.join(" "));
    }
}
