use std::path::PathBuf;

use clap::Args;
use pbounded::bar::{zeta, Chain, ChainJson};
use pbounded::golden;
use pbounded::gs::{pair_cup_power, zeta8_images};
use pbounded::rational::{rat, to_pq};
use pbounded::thompson::{f, g, rank_four_images};
use pbounded::PLMap;

use crate::report::{usage, Check, RunReport};

#[derive(Args, Debug)]
pub struct PairArgs {
    /// Pair with the alternating cycle ζ_m, m ∈ {2, 4, 8}.
    #[arg(long, conflicts_with = "chain")]
    zeta: Option<usize>,
    /// Pair with a chain on ℤ^m read from JSON (`{"degree": m, "terms": [...]}`), m ∈ {2, 4, 8}.
    #[arg(long)]
    chain: Option<PathBuf>,
    /// Write the chain that was paired to this JSON file.
    #[arg(long)]
    dump_chain: Option<PathBuf>,
}

/// The commuting images `ψ(e_i)` used in rank `m`.
fn images(m: usize) -> anyhow::Result<Vec<PLMap>> {
    Ok(match m {
        2 => vec![f(), g()],
        4 => rank_four_images().to_vec(),
        8 => zeta8_images(&rank_four_images()),
        _ => {
            return usage(format!(
                "no built-in homomorphism ℤ^{m} → F'; use rank 2, 4 or 8"
            ))
        }
    })
}

pub fn run(args: &PairArgs) -> anyhow::Result<RunReport> {
    let mut report = RunReport::new("pair");
    let (chain, golden_name) = match (args.zeta, &args.chain) {
        (Some(m), None) => {
            report.set_param("zeta", m);
            if !matches!(m, 2 | 4 | 8) {
                return usage(format!("--zeta must be 2, 4 or 8, got {m}"));
            }
            (zeta(m)?, Some(format!("zeta{m}")))
        }
        (None, Some(path)) => {
            report.set_param("chain", path.display().to_string());
            let text = std::fs::read_to_string(path).map_err(|e| {
                crate::report::UsageError(format!("cannot read {}: {e}", path.display()))
            })?;
            let json: ChainJson<Vec<i64>> = serde_json::from_str(&text)
                .map_err(|e| crate::report::UsageError(format!("{}: {e}", path.display())))?;
            (Chain::from_json(json)?, None)
        }
        _ => return usage("give exactly one of --zeta or --chain"),
    };
    let m = chain.degree();
    let images = images(m)?;
    if let Some(path) = &args.dump_chain {
        std::fs::write(path, serde_json::to_string(&chain.to_json())?)?;
    }
    let value = pair_cup_power(&images, &chain)?;
    report.set("degree", m);
    report.set("terms", chain.len());
    report.set("value", to_pq(&value));
    if let Some(name) = golden_name {
        let expected = golden::get(&name);
        let c = Check::new(&name, expected.map(rat) == Some(value.clone())).value(&value);
        report.check(match expected {
            Some(e) => c.detail(format!("golden {e}")),
            None => c.detail("no golden value"),
        });
    }
    Ok(report)
}
