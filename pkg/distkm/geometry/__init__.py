from distkm.geometry.errors import *
from distkm.geometry.points import *
from distkm.geometry.distances import *
