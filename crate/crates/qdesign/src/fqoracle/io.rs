//! Text file format for design instances.
//!
//! Line 1 is the header `q v k`; `#`-prefixed lines are comments; every
//! other non-empty line is one block, written as `k*v` digits over the
//! alphabet `0-9a-f` (the row-major generator matrix, element indices).
//! Loading canonicalizes each block to RREF and rejects duplicates and
//! rank-deficient generator sets; saving writes canonical rows.

use std::io::{BufRead, Write};

use crate::{Error, Result};

use super::design::DesignInstance;
use super::field::make_field;
use super::subspace::SubspaceMatrix;

const ALPHABET: &[u8; 16] = b"0123456789abcdef";

pub fn save_design<W: Write>(d: &DesignInstance, out: &mut W) -> Result<()> {
    writeln!(out, "{} {} {}", d.field.q, d.v, d.k)?;
    for block in d.blocks() {
        let mut line = String::with_capacity((d.k * d.v) as usize);
        for row in block.rows() {
            for &x in row {
                line.push(ALPHABET[x as usize] as char);
            }
        }
        writeln!(out, "{}", line)?;
    }
    Ok(())
}

pub fn load_design<R: BufRead>(input: R) -> Result<DesignInstance> {
    let mut lines = input
        .lines()
        .collect::<std::io::Result<Vec<String>>>()?
        .into_iter()
        .map(|l| l.trim().to_string())
        .filter(|l| !l.is_empty() && !l.starts_with('#'));

    let header = lines
        .next()
        .ok_or_else(|| Error::DesignFile("malformed header: empty file".into()))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 3 {
        return Err(Error::DesignFile(format!(
            "malformed header {header:?}: expected `q v k`"
        )));
    }
    let parse = |s: &str, name: &str| -> Result<u64> {
        s.parse()
            .map_err(|_| Error::DesignFile(format!("malformed header: bad {name} {s:?}")))
    };
    let q = parse(fields[0], "q")?;
    let v = parse(fields[1], "v")? as u32;
    let k = parse(fields[2], "k")? as u32;
    if k > v {
        return Err(Error::DesignFile(format!(
            "malformed header: k={k} exceeds v={v}"
        )));
    }
    let field = make_field(q)?;

    let mut blocks = Vec::new();
    for line in lines {
        let expected = (k * v) as usize;
        if line.len() != expected {
            return Err(Error::DesignFile(format!(
                "wrong row count: block line has {} digits, expected k*v = {}",
                line.len(),
                expected
            )));
        }
        let mut digits = Vec::with_capacity(expected);
        for ch in line.chars() {
            let value = ALPHABET
                .iter()
                .position(|&a| a as char == ch)
                .ok_or_else(|| {
                    Error::DesignFile(format!("out-of-alphabet digit {ch:?}"))
                })?;
            if value as u16 >= field.q {
                return Err(Error::DesignFile(format!(
                    "out-of-alphabet digit {ch:?}: element index {value} outside F_{q}"
                )));
            }
            digits.push(value as u16);
        }
        let rows: Vec<Vec<u16>> = digits.chunks(v as usize).map(|c| c.to_vec()).collect();
        let block = SubspaceMatrix::from_rows(&field, v, rows)?;
        if block.dim() != k {
            return Err(Error::DesignFile(format!(
                "rank deficient: block spans only {} dimensions, declared k = {}",
                block.dim(),
                k
            )));
        }
        blocks.push(block);
    }
    DesignInstance::new(field, v, k, blocks)
}
