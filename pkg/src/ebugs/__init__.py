"""Cycle partitions of de Bruijn graphs for robot identification colourings."""

from .errors import (BudgetExceeded, CarvingFailed, DegenerateField, DegenerateK,
                     EbugsError, InvalidColouring, InvalidInput, KTooLarge,
                     LogOfZero, NotADivisor, NotAWalk, NotFound, NotPrime,
                     NotPrimePower, NotPrimitive, OrderTooSmall, Overflow,
                     TooLarge, WindowMismatch)
from .field import (GF, BaseField, ExtensionField, PrimePower,
                    find_primitive_coeffs, is_prime_power, make_base_field,
                    make_extension_field)
from .lfsr import (lfsr_debruijn, lfsr_split, lfsr_translate,
                   nonprimitive_cycles, zsigmondy_ks)
from .necklace import (closed_walks, concat_partition, fkm_debruijn, interleave,
                       interleave_pair_odd, lyndon_words, necklace_graph,
                       necklaces, product)
from .oracle import (SearchResult, debruijn_cycles, enumerate_debruijn,
                     max_k_cycles, verify_conjecture)
from .words import (Colouring, CyclicWord, DecoderTable, ValidityReport,
                    build_decoder, debruijn_count, decode, field_cycle_to_word,
                    is_aperiodic, is_optimal_partition, is_valid,
                    is_valid_identification, lll_lower_bound, moreau,
                    necklace_count, necklace_size, rotate, upper_bound, window,
                    windows)

__version__ = "0.1.0"
