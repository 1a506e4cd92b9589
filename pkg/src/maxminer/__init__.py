"""Frequent-itemset mining toolkit: top-down maximal search, Apriori
baseline, brute-force oracle, association rules, and a benchmark harness."""

from ._kernels import available_backends, backend_name
from .apriori import (AprioriResult, CandidateLevel, FrequentLevel,
                      apriori_join, apriori_mine, apriori_prune)
from .datagen import GeneratorSpec, generate, generate_to_file
from .mfif import (Candidate, MfifResult, k_minus_1_subsets, mfif_mine,
                   mfif_mine_all_maximal)
from .oracle import brute_force_frequent, brute_force_maximal
from .rules import AssociationRule, expand_frequent, generate_rules
from .txdb import (ConsistencyError, FormatError, Itemset, MiningError,
                   MiningParams, ParameterError, ResourceLimitError,
                   SupportedItemset, Transaction, TransactionDatabase,
                   batch_support_counts, batch_supports, db_from_itemsets,
                   db_from_matrix, item_label, itemset_labels, make_itemset,
                   parse_item_lists, parse_matrix, support, transaction_sizes)

__version__ = "0.1.0"
