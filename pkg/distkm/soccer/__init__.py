from distkm.soccer.errors import *
from distkm.soccer.params import *
from distkm.soccer.rounds import *
from distkm.soccer.reduction import *
from distkm.soccer.result import *
from distkm.soccer.runner import *
from distkm.soccer.diagnostics import *
