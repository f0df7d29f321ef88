//! Shared board helpers: coordinates, notation, order keys, line detection.
//!
//! Cells are indexed `row * width + col` with row 0 at the bottom, which is
//! row "1" in notation. Columns are lettered from `A`.

pub(crate) const EMPTY: u8 = 0;

pub(crate) fn column_letter(col: usize) -> char {
    (b'A' + col as u8) as char
}

pub(crate) fn cell_name(col: usize, row: usize) -> String {
    format!("{}{}", column_letter(col), row + 1)
}

/// Key ordering `"<row+1>+"` strings lexicographically ("1+" < "10+" < "2+").
fn row_plus_key(row: usize) -> u64 {
    let r = row + 1;
    let bytes: [u8; 3] = if r < 10 {
        [b'0' + r as u8, b'+', 0]
    } else {
        [b'0' + (r / 10) as u8, b'0' + (r % 10) as u8, b'+']
    };
    ((bytes[0] as u64) << 16) | ((bytes[1] as u64) << 8) | bytes[2] as u64
}

/// Order key for `"<col><row>+<piece>"` notations.
pub(crate) fn placement_key(col: usize, row: usize) -> u64 {
    ((col as u64) << 24) | row_plus_key(row)
}

/// Counts stones of `who` through `at` along direction `(dc, dr)` in both
/// senses, including `at` itself.
fn run_length(cells: &[u8], width: usize, height: usize, at: usize, who: u8, dc: i32, dr: i32) -> usize {
    let (c0, r0) = ((at % width) as i32, (at / width) as i32);
    let mut count = 1;
    for sign in [1, -1] {
        let (mut c, mut r) = (c0 + sign * dc, r0 + sign * dr);
        while c >= 0 && r >= 0 && (c as usize) < width && (r as usize) < height {
            if cells[r as usize * width + c as usize] != who {
                break;
            }
            count += 1;
            c += sign * dc;
            r += sign * dr;
        }
    }
    count
}

/// True if the stone at `at` is part of a line of at least `k` stones.
pub(crate) fn completes_line(cells: &[u8], width: usize, height: usize, at: usize, k: usize) -> bool {
    let who = cells[at];
    if who == EMPTY {
        return false;
    }
    [(1, 0), (0, 1), (1, 1), (1, -1)]
        .into_iter()
        .any(|(dc, dr)| run_length(cells, width, height, at, who, dc, dr) >= k)
}

/// Renders a grid top row first, `.` for empty and `glyphs[p-1]` for stones.
pub(crate) fn render_grid(cells: &[u8], width: usize, height: usize, glyphs: [char; 2]) -> String {
    let mut out = String::with_capacity((width + 1) * height);
    for row in (0..height).rev() {
        for col in 0..width {
            out.push(match cells[row * width + col] {
                EMPTY => '.',
                p => glyphs[(p - 1) as usize],
            });
        }
        out.push('\n');
    }
    out
}

/// 3×3 line check over nine owner codes (0 = nobody).
pub(crate) fn three_in_row(owners: &[u8; 9]) -> Option<u8> {
    const LINES: [[usize; 3]; 8] = [
        [0, 1, 2],
        [3, 4, 5],
        [6, 7, 8],
        [0, 3, 6],
        [1, 4, 7],
        [2, 5, 8],
        [0, 4, 8],
        [2, 4, 6],
    ];
    LINES.iter().find_map(|l| {
        let p = owners[l[0]];
        (p != EMPTY && p == owners[l[1]] && p == owners[l[2]]).then_some(p)
    })
}
