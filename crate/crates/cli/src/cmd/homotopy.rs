use clap::Args;
use pbounded::homotopy::{
    bockstein_with_shifted_lift, random_cochain, random_cocycle, splitting_check, verify,
    LinfElement,
};
use pbounded::rational::{ratio, to_pq};
use pbounded::{Group, Mean};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::groups::parse_finite;
use crate::report::{usage, Check, RunReport};

/// Largest `|G|^(degree+1)` an exhaustive run will accept.
const MAX_TUPLES: usize = 20_000_000;

#[derive(Args, Debug)]
pub struct HomotopyArgs {
    /// A finite group: c<n> or s<n>.
    #[arg(long)]
    group: String,
    #[arg(long)]
    degree: usize,
    /// Random cochains per identity.
    #[arg(long, default_value_t = 50)]
    trials: usize,
    /// Also run the Bockstein with a shifted lift and report the defect.
    #[arg(long)]
    shifted_lift: bool,
}

pub fn run(args: &HomotopyArgs, seed: u64) -> anyhow::Result<RunReport> {
    let group = parse_finite(&args.group)?;
    if args.degree == 0 {
        return usage("--degree must be at least 1");
    }
    let tuples = group.order().checked_pow(args.degree as u32 + 1);
    if tuples.is_none_or(|t| t > MAX_TUPLES) {
        return usage(format!(
            "{} in degree {} is too large for exhaustive checks",
            group.name(),
            args.degree
        ));
    }
    let mut report = RunReport::new("homotopy-check");
    report.set_param("group", group.name());
    report.set_param("degree", args.degree);
    report.set_param("trials", args.trials);
    report.set_param("shifted_lift", args.shifted_lift);
    report.set("order", group.order());

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for c in verify::run_all(&group, args.degree, args.trials, &mut rng) {
        report.check(
            Check::new(c.name, c.passed)
                .counterexample(c.counterexample)
                .detail(format!("{} cochains x {} tuples", c.cochains, c.tuples)),
        );
    }

    let mean = Mean::uniform(&group)?;
    let functions: Vec<LinfElement> = (0..args.trials.max(1))
        .map(|_| {
            LinfElement::from_fn(&group, |_| {
                ratio(rng.gen_range(-12..=12), rng.gen_range(1..=3))
            })
        })
        .collect();
    let constants: Vec<_> = (-3..=3).map(|k| ratio(k, 2)).collect();
    let split = splitting_check(&mean, &functions, &constants);
    report.check(
        Check::new("mean_splitting", split.passed())
            .detail(format!("{} functions", split.functions_checked)),
    );

    if args.shifted_lift {
        let omega = random_cocycle(&group, args.degree, &mut rng);
        let shift = random_cochain(&group, args.degree - 1, &mut rng);
        let (output, defect) = bockstein_with_shifted_lift(&group, &omega, &shift)?;
        let bad = group
            .tuples(args.degree)
            .find(|t| output.eval(t) != omega.eval(t) + defect.eval(t));
        let labels = |t: &[usize]| t.iter().map(|g| group.label(g)).collect::<Vec<_>>();
        let sample: Vec<String> = group
            .tuples(args.degree)
            .take(8)
            .map(|t| format!("({}) -> {}", labels(&t).join(","), to_pq(&defect.eval(&t))))
            .collect();
        report.set("shifted_lift_defect_sample", sample);
        report.check(
            Check::new("bockstein_shifted_lift", bad.is_none())
                .counterexample(bad.map(|t| labels(&t)))
                .detail("output = input + coboundary of the shift"),
        );
    }
    Ok(report)
}
