from distkm.kmeans_parallel.params import *
from distkm.kmeans_parallel.selection import *
from distkm.kmeans_parallel.runner import *
