from enum import Enum


class ThresholdCase(str, Enum):
    RETARDED_CONDUCTING_VERTICAL = "retarded-conducting-vertical"
    NONRETARDED_PERMEABLE_VERTICAL = "nonretarded-permeable-vertical"
