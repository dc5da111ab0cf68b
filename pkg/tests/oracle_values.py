"""Frozen reference values (mpmath, 50 digits); see tools/make_oracles.py."""

EXP_T_PLUS = 1.512007250567647
PARABOLA_T_PLUS = 1.6506801238857844
EXP_T0_S = 0.3106601717798213
EXP_T0_X = 0.21966991411008935
EXP_T0_Y = 0.7803300858899106
PAR_T1_S = 4.75
PAR_T1_X = 5.2485291572496005
PAR_T1_Y = -0.12426457862480021
PAR_X1_T = 0.48914342544760775
PAR_X1_Y = 0.7170662166014397
ROUNDED_DIST = 4.749989761980414
ROUNDED_FOOT = 0.9999891874768655
QF_T0_S = 1.3650757744035298
QF_T0_X2 = -1.3643180303682327
QF_T0_Y = 0.9545227323210589
QF_RAY_EDGES = [1.421263176215151, 1.8653651593405027, 4.0933861424272795]
QF_SLIT = 1.3691421453477406
SHIFTED_G_AT_0 = 1.0230196759933163
SVC_X0 = 2.366025403784439
SVC_COMMON_DISTANCE = 1.013324910945083
