pub mod homotopy;
pub mod metrics;
pub mod pair;
pub mod probe;
pub mod thompson;

use pbounded::{FiniteGroup, Group};

use crate::report::usage;

/// An element of a finite group by label (`[213]`, `3`) or by index.
pub fn finite_element(group: &FiniteGroup, s: &str) -> anyhow::Result<usize> {
    if let Some(g) = group.all().iter().find(|g| group.label(g) == s) {
        return Ok(*g);
    }
    match s.parse::<usize>() {
        Ok(i) if i < group.order() => Ok(i),
        _ => usage(format!("{s:?} is not an element of {}", group.name())),
    }
}

/// `"a,b,c"` → `["a","b","c"]`; the empty string is the empty list.
pub fn split_list(s: &str) -> Vec<&str> {
    s.split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .collect()
}
