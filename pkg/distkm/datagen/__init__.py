from distkm.datagen.errors import *
from distkm.datagen.gaussian import *
from distkm.datagen.hard import *
from distkm.datagen.loading import *
