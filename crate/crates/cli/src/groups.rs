use pbounded::group::{make_cyclic, make_free_abelian, make_symmetric};
use pbounded::{FiniteGroup, FreeAbelian};

use crate::report::usage;

/// `c<n>`, `s<n>`, `z<d>`, `fprime`.
pub enum GroupSpec {
    Finite(FiniteGroup),
    FreeAbelian(FreeAbelian),
    FPrime,
}

pub fn parse_group(name: &str) -> anyhow::Result<GroupSpec> {
    if name == "fprime" {
        return Ok(GroupSpec::FPrime);
    }
    let (kind, rest) = name.split_at(name.len().min(1));
    let Ok(n) = rest.parse::<usize>() else {
        return usage(format!(
            "unknown group {name:?}: expected c<n>, s<n>, z<d> or fprime"
        ));
    };
    let g = match kind {
        "c" => GroupSpec::Finite(make_cyclic(n)?),
        "s" => GroupSpec::Finite(make_symmetric(n)?),
        "z" => GroupSpec::FreeAbelian(make_free_abelian(n)?),
        _ => {
            return usage(format!(
                "unknown group {name:?}: expected c<n>, s<n>, z<d> or fprime"
            ))
        }
    };
    Ok(g)
}

pub fn parse_finite(name: &str) -> anyhow::Result<FiniteGroup> {
    match parse_group(name)? {
        GroupSpec::Finite(g) => Ok(g),
        _ => usage(format!("{name} is not a finite group (use c<n> or s<n>)")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names() {
        assert!(matches!(parse_group("c6"), Ok(GroupSpec::Finite(g)) if g.order() == 6));
        assert!(matches!(parse_group("s4"), Ok(GroupSpec::Finite(g)) if g.order() == 24));
        assert!(matches!(parse_group("z3"), Ok(GroupSpec::FreeAbelian(z)) if z.dim() == 3));
        assert!(matches!(parse_group("fprime"), Ok(GroupSpec::FPrime)));
        for bad in ["", "c", "x3", "s5", "c0", "z0", "fprim"] {
            assert!(parse_group(bad).is_err(), "{bad}");
        }
        assert!(parse_finite("z2").is_err());
    }
}
