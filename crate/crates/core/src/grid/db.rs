use crate::error::{Result, TfError};
use crate::grid::{TfGrid, ValueScale};

/// Result of a dB conversion. For signed (WVD-family) grids the conversion
/// is applied to magnitudes and `signs` holds -1, 0 or +1 per cell.
#[derive(Debug, Clone, PartialEq)]
pub struct Decibels {
    pub grid: TfGrid,
    pub signs: Option<Vec<i8>>,
}

/// `10 log10(|v| / max|v|)` clipped below at `floor_db`. Zero cells map to
/// the floor exactly.
pub fn to_db(grid: &TfGrid, floor_db: f64) -> Result<Decibels> {
    if grid.scale() == ValueScale::Decibel {
        return Err(TfError::DegenerateGrid("grid is already in dB".into()));
    }
    if !(floor_db < 0.0) {
        return Err(TfError::DegenerateGrid(format!(
            "dB floor must be negative, got {floor_db}"
        )));
    }
    let max = grid.values().iter().fold(0.0f64, |m, v| m.max(v.abs()));
    if max == 0.0 || !max.is_finite() {
        return Err(TfError::DegenerateGrid(format!(
            "cannot convert to dB: maximum magnitude is {max}"
        )));
    }
    let converted = grid.map_values(grid.kind(), ValueScale::Decibel, |v| {
        let m = v.abs();
        if m == 0.0 {
            floor_db
        } else {
            (10.0 * (m / max).log10()).max(floor_db)
        }
    });
    let signs = grid.kind().is_signed().then(|| {
        grid.values()
            .iter()
            .map(|&v| if v > 0.0 { 1 } else if v < 0.0 { -1 } else { 0 })
            .collect()
    });
    Ok(Decibels {
        grid: converted,
        signs,
    })
}
