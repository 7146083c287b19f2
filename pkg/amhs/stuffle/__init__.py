from .product import homomorphism_check, stuffle_product
from .word_sum import WordLike, WordSum, as_word_sum

__all__ = (
    "WordLike",
    "WordSum",
    "as_word_sum",
    "homomorphism_check",
    "stuffle_product",
)
