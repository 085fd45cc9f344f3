"""Reference constants frozen from ``derive_reference.py`` (mpmath, 50 digits)."""

ZETA_CALOGERO = 0.029437251522859414
XI_SQRT5 = 0.00077761295844742169
XI_3 = 0.0002167318591699631
S2_X_CALOGERO = 1.0849625007211562
SVN_X_CALOGERO = 1.1973718899214317
SMIN_X_CALOGERO = 1.0431066063272239
SHALF_X_CALOGERO = 1.5
SVN_Y_3 = 0.0029513008231463946
S2_Y_3 = 0.00062535596664585456
LAMBDA00_CALOGERO_1D = 0.48528137423857029
LAMBDA10_CALOGERO_1D = 0.014285349872819663
X0_IL_G100 = 6.5250072278323569
W2_IL_G100 = 1.3631932281844599
X0_IP1_G1000 = 7.9527072876705067
G_C_SIGMA10 = 82.436063535006407
GR10_AT_R10 = 0.60653065971263342
S_EXPONENT_CALOGERO_G1E4 = 200.0
SVN_Y_EPS_1P001 = 1.706269405968524
SVN_Y_EPS_1P1 = 0.28423329855578086
ASYMPTOTE_1P001 = 2.4914460711655218
LINEAR_CALOGERO_EPS3 = 0.5287997716887037
X0_SIP1_0P5_G1E4 = 7.3351107606795276
W2_SIP1_0P5_G1E4 = 3.5102206065406525
X0_SIP1_1_G1E4 = 5.2509709359163167
W2_SIP1_1_G1E4 = 4.2633980328874548
X0_SIP1_2_G1E4 = 3.5307434653772665
W2_SIP1_2_G1E4 = 5.1411006294543913
