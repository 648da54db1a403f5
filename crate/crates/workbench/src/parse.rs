//! Text forms accepted on the command line: `1,1`, `{1,3}` and `1:{0};2:{4}`.

use mvwb_core::combinatorics::ParameterSet;
use mvwb_core::rational::parse as parse_rational;
use mvwb_core::{Error, Multiset};

pub fn usize_list(text: &str) -> Result<Vec<usize>, Error> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|s| s.trim().parse().map_err(|_| Error::Parse(format!("not a non-negative integer: {s:?}"))))
        .collect()
}

/// `{a,b,…}`; the braces are optional and repeats give multiplicities.
pub fn multiset(text: &str) -> Result<Multiset, Error> {
    let text = text.trim();
    let inner = text.strip_prefix('{').and_then(|t| t.strip_suffix('}')).unwrap_or(text).trim();
    if inner.is_empty() {
        return Ok(Multiset::new());
    }
    inner.split(',').map(parse_rational).collect()
}

/// `i:{…};j:{…}` for nodes `1..n−1`; nodes left out are empty.
pub fn parameter_set(text: &str, n: usize) -> Result<ParameterSet, Error> {
    if n < 2 {
        return Err(Error::BadDimensions(format!("n = {n}")));
    }
    let mut sets = vec![Multiset::new(); n - 1];
    for part in text.split(';').map(str::trim).filter(|p| !p.is_empty()) {
        let (node, values) =
            part.split_once(':').ok_or_else(|| Error::Parse(format!("expected node:{{…}}, got {part:?}")))?;
        let node: usize = node.trim().parse().map_err(|_| Error::Parse(format!("bad node {node:?}")))?;
        if node == 0 || node >= n {
            return Err(Error::IndexOutOfRange(format!("node {node} for n = {n}")));
        }
        sets[node - 1] = sets[node - 1].union(&multiset(values)?);
    }
    ParameterSet::new(n, sets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use mvwb_core::rational::{frac, int};

    #[test]
    fn lists_and_multisets() {
        assert_eq!(usize_list("1, 1").unwrap(), [1, 1]);
        assert_eq!(usize_list("").unwrap(), Vec::<usize>::new());
        assert!(usize_list("1,-1").is_err());
        let m = multiset("{1/2, 3, 3}").unwrap();
        assert_eq!(m.multiplicity(&int(3)), 2);
        assert_eq!(m.multiplicity(&frac(1, 2)), 1);
        assert_eq!(multiset("{}").unwrap(), Multiset::new());
        assert_eq!(multiset("4").unwrap().len(), 1);
    }

    #[test]
    fn parameter_sets() {
        let r = parameter_set("1:{0};2:{4}", 3).unwrap();
        assert_eq!(r.weight(), [1, 1]);
        assert_eq!(r.at(2).multiplicity(&int(4)), 1);
        assert_eq!(parameter_set("2:{1,3}", 3).unwrap().weight(), [0, 2]);
        assert!(matches!(parameter_set("3:{1}", 3), Err(Error::IndexOutOfRange(_))));
        assert!(matches!(parameter_set("1{1}", 3), Err(Error::Parse(_))));
    }
}
