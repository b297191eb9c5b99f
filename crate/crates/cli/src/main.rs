mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use pieri_core::dot::chain_tree_dot;
use pieri_core::hecke::{compute_product, BasisTag, SignedCombination};
use pieri_core::parabolic::{enumerate_multi, maximal_elements, w_multi, CutList};
use pieri_core::pieri::{
    climb, conflict_stats, enumerate_compatible, enumerate_lenart, enumerate_paths, eta, lenart_lt,
    w_sigma_k, ChainResult,
};
use pieri_core::poly::{congruent_mod_ideal, grothendieck, x_prefix_inverse, y_monomial};
use pieri_core::{Permutation, Transposition};

#[derive(Parser)]
#[command(
    name = "pieri",
    version,
    about = "Bruhat chain expansions of sorting-operator products"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Expand the signed chain sum of a permutation at one cut
    Expand {
        /// Permutation in one-line text form (bars allowed, e.g. 1362|54)
        #[arg(long)]
        sigma: String,
        /// Cut position, 1 <= k < n
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = BasisArg::K)]
        basis: BasisArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        #[arg(long, value_enum, default_value_t = MethodArg::Compatible)]
        method: MethodArg,
    },
    /// Chain enumeration over several cuts; lists the maximal endpoints
    Multi {
        #[arg(long)]
        sigma: String,
        /// Comma-separated cut positions, e.g. 2,5
        #[arg(long)]
        cuts: String,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
    /// Top endpoint of the enumeration and the climb to it
    Eta {
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        k: usize,
    },
    /// Word size, conflict patterns, and enumeration size
    Stats {
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        k: usize,
    },
    /// Exhaustive theorem checks; exits 0 only when every check passes
    Verify {
        #[arg(long)]
        n: usize,
        /// Also check the multi-cut enumeration against its oracle
        #[arg(long)]
        multi: bool,
        /// Also run the polynomial congruence checks (size capped at 3)
        #[arg(long)]
        poly: bool,
    },
    /// Grothendieck polynomial of a permutation
    Groth {
        #[arg(long)]
        sigma: String,
        /// Check the expansion congruence on polynomials (needs --k)
        #[arg(long)]
        check_pieri: bool,
        #[arg(long)]
        k: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    #[value(name = "K", alias = "k")]
    K,
    #[value(name = "KHAT", alias = "khat")]
    Khat,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Compatible,
    Paths,
    Lenart,
    Oracle,
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn parse_sigma(s: &str) -> Result<Permutation, ExitCode> {
    Permutation::parse(s).map_err(usage)
}

fn check_cut(n: usize, k: usize) -> Result<(), ExitCode> {
    if k >= 1 && k < n {
        Ok(())
    } else {
        Err(usage(format!(
            "cut k={k} out of range for n={n} (need 1 <= k < n)"
        )))
    }
}

/// Signed term lines ordered by length, then lexicographically.
fn print_combination(v: &SignedCombination) {
    let label = match v.basis() {
        BasisTag::K => "K",
        BasisTag::KHat => "Kh",
    };
    let mut terms: Vec<(&Permutation, i64)> = v.terms().collect();
    terms.sort_by_key(|(p, _)| (p.length(), (*p).clone()));
    for (p, c) in terms {
        let sign = if c < 0 { '-' } else { '+' };
        if c.abs() == 1 {
            println!("{sign}{label}_{p}");
        } else {
            println!("{sign}{}{label}_{p}", c.abs());
        }
    }
}

fn combination_of(results: &[ChainResult], n: usize) -> SignedCombination {
    SignedCombination::from_terms(
        BasisTag::K,
        n,
        results.iter().map(|r| (r.endpoint.clone(), r.sign)),
    )
}

fn run_expand(
    sigma: &str,
    k: usize,
    basis: BasisArg,
    format: FormatArg,
    method: MethodArg,
) -> Result<(), ExitCode> {
    let sigma = parse_sigma(sigma)?;
    let n = sigma.n();
    check_cut(n, k)?;

    let chains: Option<(Vec<Transposition>, Vec<ChainResult>)> = match method {
        MethodArg::Compatible => Some((
            w_sigma_k(&sigma, k).transpositions().to_vec(),
            enumerate_compatible(&sigma, k),
        )),
        MethodArg::Paths => Some((
            w_sigma_k(&sigma, k).transpositions().to_vec(),
            enumerate_paths(&sigma, k),
        )),
        MethodArg::Lenart => {
            let mut ts = w_sigma_k(&sigma, k).transpositions().to_vec();
            ts.sort_by(|&a, &b| {
                if lenart_lt(a, b) {
                    std::cmp::Ordering::Less
                } else {
                    std::cmp::Ordering::Greater
                }
            });
            Some((ts.clone(), enumerate_lenart(&sigma, k)))
        }
        MethodArg::Oracle => None,
    };

    let combination = match &chains {
        Some((_, results)) => combination_of(results, n),
        None => compute_product(&sigma, k),
    };
    let combination = match basis {
        BasisArg::K => combination,
        BasisArg::Khat => combination.change_basis(),
    };

    match format {
        FormatArg::Text => print_combination(&combination),
        FormatArg::Json => println!("{}", combination.to_json()),
        FormatArg::Dot => {
            if matches!(basis, BasisArg::Khat) {
                return Err(usage("dot output renders chain trees in the K basis only"));
            }
            let (word, results) = chains
                .as_ref()
                .ok_or_else(|| usage("dot output needs a chain method"))?;
            print!("{}", chain_tree_dot(&sigma, &[k], word, results));
        }
    }
    Ok(())
}

fn run_multi(sigma: &str, cuts: &str, format: FormatArg) -> Result<(), ExitCode> {
    let sigma = parse_sigma(sigma)?;
    let n = sigma.n();
    let parsed: Vec<usize> = cuts
        .split(',')
        .map(|tok| tok.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|_| usage(format!("cannot parse cut list {cuts:?}")))?;
    let cuts = CutList::new(parsed, n).map_err(usage)?;
    let results = enumerate_multi(&sigma, &cuts);

    match format {
        FormatArg::Text => {
            print_combination(&combination_of(&results, n));
            let maxima = maximal_elements(&results);
            let rendered: Vec<String> = maxima.iter().map(|p| p.to_string()).collect();
            println!("maximal: {}", rendered.join(" "));
        }
        FormatArg::Json => println!("{}", combination_of(&results, n).to_json()),
        FormatArg::Dot => {
            let word = w_multi(&sigma, &cuts);
            print!("{}", chain_tree_dot(&sigma, cuts.cuts(), &word, &results));
        }
    }
    Ok(())
}

fn run_eta(sigma: &str, k: usize) -> Result<(), ExitCode> {
    let sigma = parse_sigma(sigma)?;
    check_cut(sigma.n(), k)?;
    println!("eta = {}", eta(&sigma, k));
    let chain = climb(&sigma, &sigma, k).expect("the base is always an endpoint");
    let rendered: Vec<String> = chain.iter().map(|p| p.to_string()).collect();
    println!("climb: {}", rendered.join(" -> "));
    Ok(())
}

fn run_stats(sigma: &str, k: usize) -> Result<(), ExitCode> {
    let sigma = parse_sigma(sigma)?;
    check_cut(sigma.n(), k)?;
    let s = conflict_stats(&sigma, k);
    println!("m={} conflicts={} |E|={}", s.m, s.conflicts, s.e_size);
    Ok(())
}

fn run_groth(sigma: &str, check_pieri: bool, k: Option<usize>) -> Result<bool, ExitCode> {
    let sigma = parse_sigma(sigma)?;
    let n = sigma.n();
    let g = grothendieck(&sigma);
    println!("G_{sigma} = {g}");
    if !check_pieri {
        return Ok(true);
    }
    let k = k.ok_or_else(|| usage("--check-pieri needs --k"))?;
    check_cut(n, k)?;
    let lhs = g
        .mul(&y_monomial(n, &sigma.word()[..k]))
        .mul(&x_prefix_inverse(n, k));
    let mut rhs = pieri_core::poly::LaurentPolynomial::zero(n);
    for (mu, c) in pieri_core::pieri::pieri_expand(&sigma, k).terms() {
        let gm = grothendieck(mu);
        rhs = rhs.add(&if c < 0 { gm.neg() } else { gm });
    }
    let ok = congruent_mod_ideal(&lhs, &rhs);
    println!("pieri check (k={k}): {}", if ok { "ok" } else { "FAILED" });
    Ok(ok)
}

// let a closed pipe (expand | head) terminate the process like other
// line-oriented tools instead of panicking on the failed write
#[cfg(unix)]
fn reset_sigpipe() {
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn reset_sigpipe() {}

fn main() -> ExitCode {
    reset_sigpipe();
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Expand {
            sigma,
            k,
            basis,
            format,
            method,
        } => run_expand(sigma, *k, *basis, *format, *method).map(|()| true),
        Command::Multi {
            sigma,
            cuts,
            format,
        } => run_multi(sigma, cuts, *format).map(|()| true),
        Command::Eta { sigma, k } => run_eta(sigma, *k).map(|()| true),
        Command::Stats { sigma, k } => run_stats(sigma, *k).map(|()| true),
        Command::Verify { n, multi, poly } => {
            if !(1..=pieri_core::MAX_N).contains(n) {
                Err(usage(format!("n={n} out of supported range")))
            } else {
                Ok(verify::run(*n, *multi, *poly))
            }
        }
        Command::Groth {
            sigma,
            check_pieri,
            k,
        } => run_groth(sigma, *check_pieri, *k),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(code) => code,
    }
}
