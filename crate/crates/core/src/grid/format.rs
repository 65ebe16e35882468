//! Grid files.
//!
//! tfgrid layout, all integers and floats little-endian:
//!
//! ```text
//! offset  size            field
//! 0       4               magic "TFG1"
//! 4       4               u32 n_freq
//! 8       4               u32 n_time
//! 12      8 * n_freq      f64 frequency axis (Hz)
//! ..      8 * n_time      f64 time axis (s)
//! ..      8 * n_freq * n_time   f64 values, row-major [freq][time]
//! ..      1               u8 transform kind tag
//! ..      1               u8 scale tag: bit 0 = dB, bit 1 = log-frequency display
//! ```
//!
//! The CSV export is for inspection only: the first row is `time_s`
//! followed by the frequency axis, then one row per frame.

use std::fs;
use std::path::Path;

use crate::error::{Result, TfError};
use crate::grid::{TfGrid, TransformKind, ValueScale};

const MAGIC: &[u8; 4] = b"TFG1";
const SCALE_DB: u8 = 0x01;
const SCALE_LOG_FREQ: u8 = 0x02;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridFormat {
    Tfgrid,
    Csv,
}

pub fn write_grid(grid: &TfGrid, path: impl AsRef<Path>, format: GridFormat) -> Result<()> {
    let path = path.as_ref();
    let bytes = match format {
        GridFormat::Tfgrid => encode(grid),
        GridFormat::Csv => encode_csv(grid).into_bytes(),
    };
    fs::write(path, bytes).map_err(|e| TfError::io(path, e))
}

/// Reads a tfgrid file.
pub fn read_grid(path: impl AsRef<Path>) -> Result<TfGrid> {
    let path = path.as_ref();
    let bytes = fs::read(path).map_err(|e| TfError::io(path, e))?;
    decode(&bytes).map_err(|m| TfError::format(path, m))
}

pub(crate) fn encode(grid: &TfGrid) -> Vec<u8> {
    let mut out = Vec::with_capacity(14 + 8 * (grid.n_freq() + grid.n_time() + grid.values().len()));
    out.extend_from_slice(MAGIC);
    out.extend_from_slice(&(grid.n_freq() as u32).to_le_bytes());
    out.extend_from_slice(&(grid.n_time() as u32).to_le_bytes());
    for v in grid.freq_axis().iter().chain(grid.time_axis()).chain(grid.values()) {
        out.extend_from_slice(&v.to_le_bytes());
    }
    out.push(grid.kind().tag());
    let mut scale = 0u8;
    if grid.scale() == ValueScale::Decibel {
        scale |= SCALE_DB;
    }
    if grid.log_freq() {
        scale |= SCALE_LOG_FREQ;
    }
    out.push(scale);
    out
}

struct Reader<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Reader<'_> {
    fn take(&mut self, n: usize, what: &str) -> std::result::Result<&[u8], String> {
        if self.bytes.len() - self.pos < n {
            return Err(format!(
                "truncated at offset {} while reading {what}: need {n} bytes, {} remain",
                self.pos,
                self.bytes.len() - self.pos
            ));
        }
        let s = &self.bytes[self.pos..self.pos + n];
        self.pos += n;
        Ok(s)
    }

    fn u32(&mut self, what: &str) -> std::result::Result<u32, String> {
        Ok(u32::from_le_bytes(self.take(4, what)?.try_into().unwrap()))
    }

    fn f64s(&mut self, n: usize, what: &str) -> std::result::Result<Vec<f64>, String> {
        let len = n
            .checked_mul(8)
            .ok_or_else(|| format!("{what} length overflows"))?;
        Ok(self
            .take(len, what)?
            .chunks_exact(8)
            .map(|c| f64::from_le_bytes(c.try_into().unwrap()))
            .collect())
    }
}

pub(crate) fn decode(bytes: &[u8]) -> std::result::Result<TfGrid, String> {
    let mut r = Reader { bytes, pos: 0 };
    let magic = r.take(4, "magic")?;
    if magic != MAGIC {
        return Err(format!(
            "bad magic {:?} at offset 0, expected \"TFG1\"",
            String::from_utf8_lossy(magic)
        ));
    }
    let n_freq = r.u32("n_freq")? as usize;
    let n_time = r.u32("n_time")? as usize;
    let freq_axis = r.f64s(n_freq, "frequency axis")?;
    let time_axis = r.f64s(n_time, "time axis")?;
    let n_values = n_freq
        .checked_mul(n_time)
        .ok_or_else(|| "grid dimensions overflow".to_string())?;
    let values = r.f64s(n_values, "values")?;
    let kind_offset = r.pos;
    let kind_tag = r.take(1, "kind tag")?[0];
    let kind = TransformKind::from_tag(kind_tag)
        .ok_or_else(|| format!("unknown transform kind tag {kind_tag} at offset {kind_offset}"))?;
    let scale_offset = r.pos;
    let scale_tag = r.take(1, "scale tag")?[0];
    if scale_tag & !(SCALE_DB | SCALE_LOG_FREQ) != 0 {
        return Err(format!("unknown scale tag {scale_tag:#04x} at offset {scale_offset}"));
    }
    if r.pos != bytes.len() {
        return Err(format!(
            "{} trailing bytes at offset {}",
            bytes.len() - r.pos,
            r.pos
        ));
    }
    let scale = if scale_tag & SCALE_DB != 0 {
        ValueScale::Decibel
    } else {
        ValueScale::Linear
    };
    TfGrid::new(values, freq_axis, time_axis, kind, scale)
        .map(|g| g.with_log_freq(scale_tag & SCALE_LOG_FREQ != 0))
        .map_err(|e| e.to_string())
}

fn encode_csv(grid: &TfGrid) -> String {
    let mut s = String::from("time_s");
    for f in grid.freq_axis() {
        s.push_str(&format!(",{f:?}"));
    }
    s.push('\n');
    for (t, time) in grid.time_axis().iter().enumerate() {
        s.push_str(&format!("{time:?}"));
        for f in 0..grid.n_freq() {
            s.push_str(&format!(",{:?}", grid.get(f, t)));
        }
        s.push('\n');
    }
    s
}
