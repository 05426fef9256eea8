//! Parsers for the compound flag values.

use crate::swarm::{BoundPolicy, Interval, Topology};
use crate::{Error, Result};

fn num(s: &str, what: &str) -> Result<f64> {
    s.trim()
        .parse::<f64>()
        .map_err(|_| Error::Config(format!("{what}: `{s}` is not a number")))
}

/// `j=lo:hi`, where `j` is a 0-based index or a parameter name.
pub fn init_box_entry(s: &str, names: &[String]) -> Result<(usize, Interval)> {
    let (key, range) = s
        .split_once('=')
        .ok_or_else(|| Error::Config(format!("--init-box expects j=lo:hi, got `{s}`")))?;
    let idx = match key.parse::<usize>() {
        Ok(i) => i,
        Err(_) => names
            .iter()
            .position(|n| n == key)
            .ok_or_else(|| Error::Config(format!("--init-box: unknown parameter `{key}`")))?,
    };
    if idx >= names.len() {
        return Err(Error::Config(format!("--init-box: index {idx} out of range")));
    }
    let (lo, hi) = range
        .split_once(':')
        .ok_or_else(|| Error::Config(format!("--init-box expects j=lo:hi, got `{s}`")))?;
    let (lo, hi) = (num(lo, "--init-box")?, num(hi, "--init-box")?);
    if !(lo <= hi) {
        return Err(Error::Config(format!("--init-box: empty interval [{lo}, {hi}]")));
    }
    Ok((idx, Interval::new(lo, hi)))
}

/// `name=value`.
pub fn fixed(s: &str) -> Result<(String, f64)> {
    let (k, v) = s
        .split_once('=')
        .ok_or_else(|| Error::Config(format!("--fix expects name=value, got `{s}`")))?;
    Ok((k.to_string(), num(v, "--fix")?))
}

/// `name=lo:hi:n`, optionally followed by `:log` for log spacing.
pub fn grid_axis(s: &str) -> Result<(String, Vec<f64>)> {
    let bad = || Error::Config(format!("--grid expects name=lo:hi:n[:log], got `{s}`"));
    let (k, spec) = s.split_once('=').ok_or_else(bad)?;
    let parts: Vec<&str> = spec.split(':').collect();
    if !(parts.len() == 3 || (parts.len() == 4 && parts[3] == "log")) {
        return Err(bad());
    }
    let (lo, hi) = (num(parts[0], "--grid")?, num(parts[1], "--grid")?);
    let n: usize = parts[2].parse().map_err(|_| bad())?;
    if n == 0 || !(lo <= hi) {
        return Err(bad());
    }
    let axis = if parts.len() == 4 {
        if !(lo > 0.0) {
            return Err(Error::Config("--grid: log spacing needs a positive lower end".into()));
        }
        crate::diagnostics::log_grid(lo, hi, n)
    } else if n == 1 {
        vec![lo]
    } else {
        (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect()
    };
    Ok((k.to_string(), axis))
}

/// `global` or `local:K`.
pub fn topology(s: &str) -> Result<Topology> {
    if s == "global" {
        return Ok(Topology::GlobalBest);
    }
    match s.strip_prefix("local:").map(str::parse::<usize>) {
        Some(Ok(k)) if k >= 1 => Ok(Topology::LocalBest { neighbors: k }),
        _ => Err(Error::Config(format!("--topology expects global or local:K, got `{s}`"))),
    }
}

/// `none`, `full` or `near-edge`.
pub fn bound_policy(s: &str) -> Result<BoundPolicy> {
    match s {
        "none" => Ok(BoundPolicy::NoneWithPenalty),
        "full" => Ok(BoundPolicy::RerandomizeFull),
        "near-edge" => Ok(BoundPolicy::near_edge_default()),
        _ => Err(Error::Config(format!("--bound-policy expects none, full or near-edge, got `{s}`"))),
    }
}

/// Comma-separated numbers.
pub fn number_list(s: &str, what: &str) -> Result<Vec<f64>> {
    s.split(',').map(|v| num(v, what)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses() {
        let names: Vec<String> = ["alpha", "beta"].iter().map(|s| s.to_string()).collect();
        assert_eq!(init_box_entry("1=0:5", &names).unwrap(), (1, Interval::new(0.0, 5.0)));
        assert_eq!(init_box_entry("alpha=-1:2.5", &names).unwrap(), (0, Interval::new(-1.0, 2.5)));
        assert!(init_box_entry("gamma=0:1", &names).is_err());
        assert!(init_box_entry("0=2:1", &names).is_err());
        assert_eq!(fixed("s=141.5").unwrap(), ("s".into(), 141.5));
        assert_eq!(grid_axis("k=0:1:3").unwrap(), ("k".into(), vec![0.0, 0.5, 1.0]));
        assert_eq!(grid_axis("k=1:100:3:log").unwrap().1.len(), 3);
        assert!(grid_axis("k=0:1").is_err());
        assert_eq!(topology("local:6").unwrap(), Topology::LocalBest { neighbors: 6 });
        assert!(topology("ring").is_err());
        assert_eq!(bound_policy("none").unwrap(), BoundPolicy::NoneWithPenalty);
        assert_eq!(number_list("0,0.05,1", "x").unwrap(), vec![0.0, 0.05, 1.0]);
    }
}
