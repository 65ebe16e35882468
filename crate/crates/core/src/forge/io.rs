//! Signal files: 16-bit mono PCM WAV, raw little-endian f64, and CSV.

use std::fs;
use std::path::Path;

use crate::error::{Result, TfError};
use crate::signal::RealSignal;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignalFormat {
    /// RIFF/WAVE, PCM, 16 bit, one channel. Samples normalized by 1/32768.
    WavPcm16Mono,
    /// Little-endian IEEE-754 doubles, no header.
    RawF64,
    /// One decimal sample per line; a non-numeric first line is a header.
    Csv,
}

/// Loads a signal. `sample_rate` is required for raw and CSV files and
/// ignored for WAV, whose header carries the rate.
pub fn load_signal(
    path: impl AsRef<Path>,
    format: SignalFormat,
    sample_rate: Option<f64>,
) -> Result<RealSignal> {
    let path = path.as_ref();
    let bytes = fs::read(path).map_err(|e| TfError::io(path, e))?;
    match format {
        SignalFormat::WavPcm16Mono => parse_wav(path, &bytes),
        SignalFormat::RawF64 => {
            let fs = sample_rate.ok_or(TfError::MissingParameter("sample_rate"))?;
            if bytes.len() % 8 != 0 {
                return Err(TfError::format(
                    path,
                    format!("raw f64 file length {} is not a multiple of 8", bytes.len()),
                ));
            }
            let samples = bytes
                .chunks_exact(8)
                .map(|c| f64::from_le_bytes(c.try_into().expect("8-byte chunk")))
                .collect();
            RealSignal::new(samples, fs)
        }
        SignalFormat::Csv => {
            let fs = sample_rate.ok_or(TfError::MissingParameter("sample_rate"))?;
            let text = std::str::from_utf8(&bytes)
                .map_err(|e| TfError::format(path, format!("not UTF-8: {e}")))?;
            let mut samples = Vec::new();
            for (lineno, line) in text.lines().enumerate() {
                let field = line.split(',').next().unwrap_or("").trim();
                if field.is_empty() {
                    continue;
                }
                match field.parse::<f64>() {
                    Ok(v) => samples.push(v),
                    Err(_) if lineno == 0 => {}
                    Err(_) => {
                        return Err(TfError::format(
                            path,
                            format!("line {}: cannot parse {field:?} as a number", lineno + 1),
                        ))
                    }
                }
            }
            RealSignal::new(samples, fs)
        }
    }
}

/// Writes a signal. WAV output clips to [-1, 1] and quantizes to 16 bit.
pub fn write_signal(signal: &RealSignal, path: impl AsRef<Path>, format: SignalFormat) -> Result<()> {
    let path = path.as_ref();
    let bytes = match format {
        SignalFormat::RawF64 => signal
            .samples()
            .iter()
            .flat_map(|v| v.to_le_bytes())
            .collect::<Vec<u8>>(),
        SignalFormat::Csv => {
            let mut s = String::with_capacity(signal.len() * 20);
            for v in signal.samples() {
                s.push_str(&format!("{v:?}\n"));
            }
            s.into_bytes()
        }
        SignalFormat::WavPcm16Mono => encode_wav(signal),
    };
    fs::write(path, bytes).map_err(|e| TfError::io(path, e))
}

fn encode_wav(signal: &RealSignal) -> Vec<u8> {
    let data_len = (signal.len() * 2) as u32;
    let rate = signal.sample_rate().round() as u32;
    let mut out = Vec::with_capacity(44 + data_len as usize);
    out.extend_from_slice(b"RIFF");
    out.extend_from_slice(&(36 + data_len).to_le_bytes());
    out.extend_from_slice(b"WAVE");
    out.extend_from_slice(b"fmt ");
    out.extend_from_slice(&16u32.to_le_bytes());
    out.extend_from_slice(&1u16.to_le_bytes()); // PCM
    out.extend_from_slice(&1u16.to_le_bytes()); // mono
    out.extend_from_slice(&rate.to_le_bytes());
    out.extend_from_slice(&(rate * 2).to_le_bytes());
    out.extend_from_slice(&2u16.to_le_bytes());
    out.extend_from_slice(&16u16.to_le_bytes());
    out.extend_from_slice(b"data");
    out.extend_from_slice(&data_len.to_le_bytes());
    for v in signal.samples() {
        let q = (v.clamp(-1.0, 1.0) * 32768.0).round().clamp(-32768.0, 32767.0) as i16;
        out.extend_from_slice(&q.to_le_bytes());
    }
    out
}

fn parse_wav(path: &Path, bytes: &[u8]) -> Result<RealSignal> {
    let err = |msg: String| TfError::format(path, msg);
    if bytes.len() < 12 {
        return Err(err(format!("truncated RIFF header: {} bytes", bytes.len())));
    }
    if &bytes[0..4] != b"RIFF" || &bytes[8..12] != b"WAVE" {
        return Err(err("missing RIFF/WAVE signature at offset 0".into()));
    }

    let u16_at = |o: usize| u16::from_le_bytes([bytes[o], bytes[o + 1]]);
    let u32_at = |o: usize| u32::from_le_bytes([bytes[o], bytes[o + 1], bytes[o + 2], bytes[o + 3]]);

    let mut pos = 12;
    let mut fmt: Option<(u16, u16, u32, u16)> = None;
    while pos + 8 <= bytes.len() {
        let id = &bytes[pos..pos + 4];
        let size = u32_at(pos + 4) as usize;
        let body = pos + 8;
        if id == b"fmt " {
            if size < 16 || body + 16 > bytes.len() {
                return Err(err(format!("truncated fmt chunk at offset {pos}")));
            }
            fmt = Some((u16_at(body), u16_at(body + 2), u32_at(body + 4), u16_at(body + 14)));
        } else if id == b"data" {
            let (tag, channels, rate, bits) =
                fmt.ok_or_else(|| err("data chunk before fmt chunk".into()))?;
            if tag != 1 {
                return Err(err(format!("unsupported format tag {tag}; only PCM (1) is read")));
            }
            if channels != 1 {
                return Err(err(format!("{channels} channels; only mono is supported")));
            }
            if bits != 16 {
                return Err(err(format!("unsupported bit depth {bits}; only 16-bit is read")));
            }
            if body + size > bytes.len() {
                return Err(err(format!(
                    "data chunk at offset {pos} declares {size} bytes but only {} remain",
                    bytes.len() - body
                )));
            }
            if rate == 0 {
                return Err(err("sample rate 0 in fmt chunk".into()));
            }
            let samples = bytes[body..body + size]
                .chunks_exact(2)
                .map(|c| i16::from_le_bytes([c[0], c[1]]) as f64 / 32768.0)
                .collect();
            return RealSignal::new(samples, rate as f64);
        }
        // Chunks are word aligned.
        pos = body + size + (size & 1);
    }
    Err(err("no data chunk found".into()))
}
