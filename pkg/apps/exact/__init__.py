from .counting import count, divisor_weight, divisor_weights
from .oracle import brute_force_count, partition_vectors
from .star import assembly_counts, star_transform
from .tables import CountTable, Kind, PartitionVector, StarSequence

__all__ = [
    'CountTable', 'Kind', 'PartitionVector', 'StarSequence', 'assembly_counts',
    'brute_force_count', 'count', 'divisor_weight', 'divisor_weights',
    'partition_vectors', 'star_transform',
]
