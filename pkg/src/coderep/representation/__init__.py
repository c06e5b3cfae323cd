"""Statement representations: encoders, lossless decoders and pair assembly."""

from .abstraction import AbstractionMap, abstract_tf1, build_idiom_set, substitute
from .decoders import decode
from .encoders import EncodeContext, encode, wt2_literals
from .ids import ALL, LOSSLESS, RepresentationId, is_automatically_patchable, representation
from .pairs import EncodedExample, RepresentationEncoder, make_pair
from .wordsplit import join_subwords, split_identifier

__all__ = [
    "ALL", "AbstractionMap", "EncodeContext", "EncodedExample", "LOSSLESS", "RepresentationEncoder",
    "RepresentationId", "abstract_tf1", "build_idiom_set", "decode", "encode", "is_automatically_patchable",
    "join_subwords", "make_pair", "representation", "split_identifier", "substitute", "wt2_literals",
]
