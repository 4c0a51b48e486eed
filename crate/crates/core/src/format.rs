//! Text file formats for point sets and truth tables.
//!
//! Point-set file:
//! ```text
//! n=3
//! # comment
//! 000
//! 100        <- coordinate 1 is the leftmost character, i.e. point 1
//! 0x4
//! ```
//! Truth-table file: `n=<int>` then the table as lowercase hex of
//! `⌈2ⁿ/8⌉` bytes in address order, bit `x` at byte `x/8`, bit `x mod 8`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::function::{check_dimension, BooleanFunction, PointSet};

/// Lines that carry content, with 1-based line numbers. Comments start at
/// `#` and run to end of line.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_header(line_no: usize, line: &str) -> Result<u32> {
    let value = line
        .strip_prefix("n=")
        .ok_or_else(|| Error::parse(line_no, format!("expected header \"n=<int>\", found {line:?}")))?;
    let n: u32 = value.trim().parse().map_err(|_| Error::parse(line_no, format!("invalid dimension {value:?}")))?;
    check_dimension(n).map_err(|e| Error::parse(line_no, e.to_string()))?;
    Ok(n)
}

fn parse_point(line_no: usize, line: &str, n: u32) -> Result<usize> {
    let point = if let Some(hex) = line.strip_prefix("0x").or_else(|| line.strip_prefix("0X")) {
        usize::from_str_radix(hex, 16).map_err(|_| Error::parse(line_no, format!("invalid hex point {line:?}")))?
    } else {
        if line.len() != n as usize {
            return Err(Error::parse(
                line_no,
                format!("binary point {line:?} has length {}, expected {n}", line.len()),
            ));
        }
        line.bytes().enumerate().try_fold(0usize, |acc, (i, b)| match b {
            b'0' => Ok(acc),
            b'1' => Ok(acc | 1 << i),
            _ => Err(Error::parse(line_no, format!("invalid character {:?} in point {line:?}", b as char))),
        })?
    };
    if point >> n != 0 {
        return Err(Error::parse(line_no, format!("point {line} out of range for n={n}")));
    }
    Ok(point)
}

/// Parses one point written as a binary string or `0x` hex.
pub fn parse_point_text(text: &str, n: u32) -> Result<usize> {
    parse_point(1, text.trim(), n).map_err(|e| match e {
        Error::Parse { message, .. } => Error::Generator(message),
        other => other,
    })
}

pub fn parse_point_set(text: &str) -> Result<PointSet> {
    let mut lines = content_lines(text);
    let (line_no, header) = lines.next().ok_or_else(|| Error::parse(1, "missing header \"n=<int>\""))?;
    let n = parse_header(line_no, header)?;
    let points = lines.map(|(no, line)| parse_point(no, line, n)).collect::<Result<Vec<_>>>()?;
    PointSet::new(n, points)
}

/// Binary string of a point, coordinate 1 first.
pub fn point_to_binary(x: usize, n: u32) -> String {
    (0..n).map(|i| if x >> i & 1 == 1 { '1' } else { '0' }).collect()
}

pub fn write_point_set(set: &PointSet) -> String {
    let mut out = format!("n={}\n", set.n());
    for &x in set.points() {
        out.push_str(&point_to_binary(x, set.n()));
        out.push('\n');
    }
    out
}

/// Lowercase hex of the table bytes.
pub fn table_hex(f: &BooleanFunction) -> String {
    f.to_bytes().iter().fold(String::new(), |mut s, b| {
        let _ = write!(s, "{b:02x}");
        s
    })
}

pub fn function_from_hex(n: u32, hex: &str) -> Result<BooleanFunction> {
    if !hex.len().is_multiple_of(2) {
        return Err(Error::Table(format!("odd number of hex digits ({})", hex.len())));
    }
    let bytes = (0..hex.len())
        .step_by(2)
        .map(|i| {
            hex.get(i..i + 2)
                .and_then(|pair| u8::from_str_radix(pair, 16).ok())
                .ok_or_else(|| Error::Table(format!("invalid hex at offset {i}")))
        })
        .collect::<Result<Vec<_>>>()?;
    BooleanFunction::from_bytes(n, &bytes)
}

pub fn parse_truth_table(text: &str) -> Result<BooleanFunction> {
    let mut lines = content_lines(text);
    let (line_no, header) = lines.next().ok_or_else(|| Error::parse(1, "missing header \"n=<int>\""))?;
    let n = parse_header(line_no, header)?;
    let (line_no, hex) = lines.next().ok_or_else(|| Error::parse(line_no + 1, "missing table line"))?;
    let f = function_from_hex(n, hex).map_err(|e| Error::parse(line_no, e.to_string()))?;
    if let Some((extra, _)) = lines.next() {
        return Err(Error::parse(extra, "unexpected content after table line"));
    }
    Ok(f)
}

pub fn write_truth_table(f: &BooleanFunction) -> String {
    format!("n={}\n{}\n", f.n(), table_hex(f))
}
