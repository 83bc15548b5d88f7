//! Move-to-front recoding over a list initialized to 0, 1, ..., 255.

fn identity_list() -> [u8; 256] {
    let mut list = [0u8; 256];
    for (i, slot) in list.iter_mut().enumerate() {
        *slot = i as u8;
    }
    list
}

pub fn mtf_encode(data: &[u8]) -> Vec<u8> {
    let mut list = identity_list();
    data.iter()
        .map(|&b| {
            let rank = list.iter().position(|&c| c == b).unwrap();
            list.copy_within(0..rank, 1);
            list[0] = b;
            rank as u8
        })
        .collect()
}

pub fn mtf_decode(data: &[u8]) -> Vec<u8> {
    let mut list = identity_list();
    data.iter()
        .map(|&rank| {
            let rank = rank as usize;
            let b = list[rank];
            list.copy_within(0..rank, 1);
            list[0] = b;
            b
        })
        .collect()
}
