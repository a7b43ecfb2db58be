//! Partition of a connected graph into connected blobs of size in `[k, Δk]`
//! and the auxiliary graph on blobs.

mod aux;
mod blobs;

pub use aux::{auxiliary_blob_graph, AuxiliaryGraph};
pub use blobs::{blob_partition, BlobPartition, BlobPartitionJson};
