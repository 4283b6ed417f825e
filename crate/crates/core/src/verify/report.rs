//! Tab-separated report lines.

use crate::enumerate::Kind;
use crate::poly::IntPolynomial;
use crate::{Error, Result};

use super::{Outcome, VerificationRecord};

pub fn format_record(r: &VerificationRecord) -> String {
    format!(
        "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
        r.canonical_key,
        r.rank,
        r.kind,
        r.switching.to_csv(),
        r.h.to_csv(),
        r.rook_number,
        r.deg_h,
        r.simple,
        r.sharp,
        r.sharp_prime,
        r.match_poly,
        r.match_reg,
        r.elapsed_ms
    )
}

pub fn format_outcome(o: &Outcome) -> String {
    match o {
        Outcome::Verified(r) => format_record(r),
        Outcome::Timeout {
            canonical_key,
            rank,
            kind,
            elapsed_ms,
        } => {
            format!("{canonical_key}\t{rank}\t{kind}\ttimeout\t{elapsed_ms}")
        }
    }
}

pub fn parse_record(line: &str) -> Result<VerificationRecord> {
    let bad = |what: &str| Error::InvalidArgument(format!("bad report field {what}: {line:?}"));
    let f: Vec<&str> = line.split('\t').collect();
    if f.len() != 13 {
        return Err(bad("count"));
    }
    let num = |k: usize, name: &str| f[k].parse::<u64>().map_err(|_| bad(name));
    let flag = |k: usize, name: &str| f[k].parse::<bool>().map_err(|_| bad(name));
    let poly = |k: usize, name: &str| IntPolynomial::from_csv(f[k]).ok_or_else(|| bad(name));
    Ok(VerificationRecord {
        canonical_key: f[0].to_string(),
        rank: num(1, "rank")? as usize,
        kind: f[2].parse::<Kind>()?,
        switching: poly(3, "switching")?,
        h: poly(4, "h")?,
        rook_number: num(5, "rook_number")? as usize,
        deg_h: num(6, "deg_h")? as usize,
        simple: flag(7, "simple")?,
        sharp: flag(8, "sharp")?,
        sharp_prime: flag(9, "sharp_prime")?,
        match_poly: flag(10, "match_poly")?,
        match_reg: flag(11, "match_reg")?,
        elapsed_ms: num(12, "elapsed_ms")?,
    })
}
