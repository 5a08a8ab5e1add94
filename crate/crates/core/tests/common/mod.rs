//! The G2 worked example over the 14 weights with R at most R(2,2).

#![allow(dead_code)]

pub const ORDER: [[i64; 2]; 14] =
    [[0, 0], [0, 1], [1, 0], [0, 2], [1, 1], [0, 3], [2, 0], [1, 2], [0, 4], [2, 1], [1, 3], [3, 0], [0, 5], [2, 2]];

pub const ORBIT_SUMS: [[i64; 14]; 14] = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [-1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [-1, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, -1, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [2, 0, 0, -2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, -1, 0, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [-1, 1, 0, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 1, -1, -1, -1, 1, 0, 0, 0, 0, 0, 0],
    [-1, 0, 1, 0, 0, 0, 0, -1, 1, 0, 0, 0, 0, 0],
    [0, -1, 0, 1, 0, 1, 0, -1, -1, 1, 0, 0, 0, 0],
    [2, -1, -1, 0, 2, 0, -1, 0, -1, -1, 1, 0, 0, 0],
    [-1, 0, 0, 0, 0, 0, 0, 0, 1, 0, -1, 1, 0, 0],
    [-1, 0, 0, 0, 0, 0, 1, 0, 0, 0, -1, 0, 1, 0],
    [1, 1, 0, -2, 0, 1, 0, 1, 0, -1, 0, -1, -1, 1],
];

pub const CHARACTERS: [[i64; 14]; 14] = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [2, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [3, 2, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [4, 4, 2, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [5, 4, 3, 2, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [5, 3, 3, 2, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0],
    [9, 8, 6, 5, 3, 2, 1, 1, 0, 0, 0, 0, 0, 0],
    [8, 7, 5, 5, 3, 2, 1, 1, 1, 0, 0, 0, 0, 0],
    [10, 10, 7, 7, 5, 3, 2, 2, 1, 1, 0, 0, 0, 0],
    [16, 14, 12, 10, 7, 6, 4, 3, 2, 1, 1, 0, 0, 0],
    [9, 7, 7, 5, 4, 4, 3, 2, 1, 1, 1, 1, 0, 0],
    [12, 11, 9, 8, 6, 5, 3, 3, 2, 1, 1, 0, 1, 0],
    [21, 19, 16, 15, 11, 9, 7, 6, 4, 3, 2, 1, 1, 1],
];

pub const LAYER_SUMS: [[i64; 14]; 14] = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [-1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [-1, -1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, -1, 0, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, -1, -1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, -1, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, -1, -1, 0, 1, 0, 0, 0, 0, 0, 0],
    [-1, 1, 1, 0, -1, -1, 0, 0, 1, 0, 0, 0, 0, 0],
    [-1, 0, 1, 1, -1, 0, 0, -1, 0, 1, 0, 0, 0, 0],
    [1, -1, 0, 1, 1, 0, -1, -1, -1, 0, 1, 0, 0, 0],
    [0, -1, 0, 1, 1, 0, -1, -1, 0, 0, 0, 1, 0, 0],
    [0, -1, 0, 1, 1, 0, 0, -1, -1, 0, 0, 0, 1, 0],
    [0, 0, 0, -1, 1, 1, 0, 0, 0, -1, -1, 0, 0, 1],
];

pub const LAYER_DECOMPOSITIONS: [[i64; 14]; 14] = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 2, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 1, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [2, 0, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [1, 2, 1, 2, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0],
    [1, 2, 0, 2, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0],
    [0, 3, 0, 2, 2, 1, 0, 1, 0, 1, 0, 0, 0, 0],
    [2, 2, 2, 3, 1, 2, 1, 1, 1, 0, 1, 0, 0, 0],
    [2, 0, 2, 1, 0, 1, 1, 1, 0, 0, 0, 1, 0, 0],
    [1, 2, 1, 2, 1, 2, 0, 1, 1, 0, 0, 0, 1, 0],
    [2, 3, 1, 4, 2, 2, 1, 2, 1, 1, 1, 0, 0, 1],
];

pub const DOMINANCE: [[i64; 14]; 14] = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0],
    [1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0],
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0],
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0],
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0],
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0],
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 1, 0],
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
];
