//! Frozen reference values for the Thompson group computations.

use std::collections::BTreeMap;

pub const VALUES_TXT: &str = include_str!("../golden/values.txt");

/// `name value` pairs; `#` starts a comment.
pub fn parse(text: &str) -> BTreeMap<String, i64> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .filter_map(|l| {
            let mut it = l.split_whitespace();
            let k = it.next()?;
            let v = it.next()?.parse().ok()?;
            Some((k.to_string(), v))
        })
        .collect()
}

pub fn values() -> BTreeMap<String, i64> {
    parse(VALUES_TXT)
}

pub fn get(name: &str) -> Option<i64> {
    values().get(name).copied()
}

#[cfg(test)]
mod tests {
    #[test]
    fn fixture_is_complete() {
        let v = super::values();
        for k in ["alpha_fg", "alpha_gf", "zeta2", "zeta4", "zeta8"] {
            assert!(v.contains_key(k), "{k} missing from golden/values.txt");
        }
    }
}
