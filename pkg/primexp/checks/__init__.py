from .interface import Check
from .bounds_check import BoundsCheck
from .census_check import CensusCheck
from .lemma24_check import Lemma24Check
from .lemma34_check import Lemma34Check
from .thm33_check import Thm33Check
from .thm36_check import Thm36Check
