"""Embedded factor and efficiency tables.

Values are stored with the digits of their sources; nothing here is
recomputed at import time.
"""

# Refined Sn factors c_n for n = 2..100 (reference-implementation arrays).
REFINED_SN = (
    0.7430, 1.8498, 0.9551, 1.3486, 0.9941, 1.1983, 1.0050, 1.1318, 1.0069, 1.0959,
    1.0063, 1.0742, 1.0051, 1.0601, 1.0038, 1.0501, 1.0028, 1.0430, 1.0022, 1.0374,
    1.0014, 1.0331, 1.0009, 1.0297, 1.0007, 1.0269, 1.0004, 1.0245, 1.0001, 1.0226,
    0.9999, 1.0209, 0.9997, 1.0195, 0.9998, 1.0183, 0.9996, 1.0172, 0.9997, 1.0162,
    0.9996, 1.0154, 0.9996, 1.0146, 0.9996, 1.0139, 0.9995, 1.0132, 0.9995, 1.0126,
    0.9995, 1.0123, 0.9995, 1.0117, 0.9995, 1.0113, 0.9996, 1.0109, 0.9996, 1.0105,
    0.9995, 1.0102, 0.9996, 1.0099, 0.9997, 1.0095, 0.9996, 1.0092, 0.9997, 1.0090,
    0.9997, 1.0088, 0.9996, 1.0085, 0.9997, 1.0084, 0.9997, 1.0081, 0.9997, 1.0079,
    0.9997, 1.0076, 0.9997, 1.0076, 0.9997, 1.0074, 0.9997, 1.0072, 0.9997, 1.0070,
    0.9997, 1.0069, 0.9997, 1.0067, 0.9998, 1.0066, 0.9997, 1.0065, 0.9998,
)

# Refined Qn factors d_n for n = 2..100 (reference-implementation arrays).
REFINED_QN = (
    0.3995, 0.9939, 0.5133, 0.8441, 0.6122, 0.8589, 0.6700, 0.8736, 0.7201, 0.8890,
    0.7575, 0.9023, 0.7855, 0.9125, 0.8078, 0.9211, 0.8260, 0.9279, 0.8410, 0.9338,
    0.8537, 0.9389, 0.8644, 0.9430, 0.8737, 0.9468, 0.8819, 0.9501, 0.8890, 0.9530,
    0.8953, 0.9557, 0.9010, 0.9579, 0.9060, 0.9600, 0.9106, 0.9619, 0.9148, 0.9636,
    0.9185, 0.9652, 0.9220, 0.9667, 0.9252, 0.9680, 0.9281, 0.9692, 0.9309, 0.9704,
    0.9333, 0.9715, 0.9357, 0.9724, 0.9378, 0.9733, 0.9399, 0.9742, 0.9418, 0.9750,
    0.9435, 0.9757, 0.9453, 0.9765, 0.9469, 0.9771, 0.9484, 0.9777, 0.9498, 0.9784,
    0.9511, 0.9789, 0.9523, 0.9794, 0.9536, 0.9800, 0.9547, 0.9805, 0.9558, 0.9809,
    0.9568, 0.9814, 0.9578, 0.9818, 0.9587, 0.9822, 0.9597, 0.9826, 0.9605, 0.9829,
    0.9614, 0.9833, 0.9621, 0.9836, 0.9629, 0.9840, 0.9636, 0.9843, 0.9644,
)

# Croux & Rousseeuw (1992) small-sample factors, n = 2..9.
CROUX1992_SN = (0.743, 1.851, 0.954, 1.351, 0.993, 1.198, 1.005, 1.131)
CROUX1992_QN = (0.399, 0.994, 0.512, 0.844, 0.611, 0.857, 0.669, 0.872)

# robustbase 0.95-0 Qn factors, n = 2..12.
ROBUSTBASE_QN = (
    0.399356, 0.99365, 0.51321, 0.84401, 0.61220, 0.85877,
    0.66993, 0.87344, 0.72014, 0.88906, 0.75743,
)

# Published simulation table of refined factors: (n, c_n, d_n).
PUBLISHED_FACTORS = (
    (2, 0.7431, 0.3995),
    (3, 1.8493, 0.9937),
    (4, 0.9550, 0.5132),
    (5, 1.3487, 0.8440),
    (6, 0.9940, 0.6122),
    (7, 1.1985, 0.8588),
    (8, 1.0050, 0.6699),
    (9, 1.1317, 0.8734),
    (10, 1.0070, 0.7201),
    (11, 1.0960, 0.8891),
    (12, 1.0063, 0.7575),
    (13, 1.0742, 0.9023),
    (14, 1.0052, 0.7855),
    (15, 1.0600, 0.9125),
    (16, 1.0039, 0.8078),
    (17, 1.0502, 0.9210),
    (18, 1.0028, 0.8260),
    (19, 1.0429, 0.9279),
    (20, 1.0021, 0.8411),
    (21, 1.0374, 0.9338),
    (22, 1.0014, 0.8537),
    (23, 1.0331, 0.9388),
    (24, 1.0009, 0.8644),
    (25, 1.0296, 0.9431),
    (26, 1.0007, 0.8737),
    (27, 1.0269, 0.9468),
    (28, 1.0004, 0.8819),
    (29, 1.0245, 0.9501),
    (30, 1.0001, 0.8890),
    (31, 1.0226, 0.9531),
    (32, 0.9999, 0.8953),
    (33, 1.0209, 0.9556),
    (34, 0.9998, 0.9009),
    (35, 1.0195, 0.9579),
    (36, 0.9997, 0.9060),
    (37, 1.0182, 0.9600),
    (38, 0.9996, 0.9106),
    (39, 1.0171, 0.9619),
    (40, 0.9997, 0.9147),
    (41, 1.0162, 0.9636),
    (42, 0.9996, 0.9185),
    (43, 1.0154, 0.9652),
    (44, 0.9996, 0.9220),
    (45, 1.0146, 0.9667),
    (46, 0.9996, 0.9252),
    (47, 1.0139, 0.9680),
    (48, 0.9995, 0.9281),
    (49, 1.0133, 0.9692),
    (50, 0.9995, 0.9308),
    (51, 1.0127, 0.9704),
    (52, 0.9996, 0.9333),
    (53, 1.0122, 0.9714),
    (54, 0.9995, 0.9356),
    (55, 1.0117, 0.9724),
    (56, 0.9995, 0.9378),
    (57, 1.0112, 0.9733),
    (58, 0.9996, 0.9399),
    (59, 1.0109, 0.9742),
    (60, 0.9996, 0.9418),
    (61, 1.0105, 0.9750),
    (62, 0.9995, 0.9436),
    (63, 1.0102, 0.9757),
    (64, 0.9996, 0.9452),
    (65, 1.0099, 0.9764),
    (66, 0.9996, 0.9469),
    (67, 1.0095, 0.9771),
    (68, 0.9996, 0.9483),
    (69, 1.0092, 0.9778),
    (70, 0.9996, 0.9497),
    (71, 1.0090, 0.9784),
    (72, 0.9996, 0.9511),
    (73, 1.0088, 0.9789),
    (74, 0.9997, 0.9524),
    (75, 1.0085, 0.9794),
    (76, 0.9997, 0.9536),
    (77, 1.0083, 0.9800),
    (78, 0.9997, 0.9547),
    (79, 1.0081, 0.9805),
    (80, 0.9996, 0.9558),
    (81, 1.0079, 0.9809),
    (82, 0.9997, 0.9568),
    (83, 1.0077, 0.9814),
    (84, 0.9997, 0.9578),
    (85, 1.0076, 0.9818),
    (86, 0.9997, 0.9588),
    (87, 1.0074, 0.9822),
    (88, 0.9997, 0.9597),
    (89, 1.0072, 0.9825),
    (90, 0.9997, 0.9605),
    (91, 1.0071, 0.9830),
    (92, 0.9997, 0.9614),
    (93, 1.0069, 0.9833),
    (94, 0.9997, 0.9621),
    (95, 1.0068, 0.9836),
    (96, 0.9998, 0.9629),
    (97, 1.0067, 0.9840),
    (98, 0.9998, 0.9636),
    (99, 1.0065, 0.9843),
    (100, 0.9998, 0.9644),
    (109, 1.0060, 0.9856),
    (110, 0.9999, 0.9675),
    (119, 1.0054, 0.9868),
    (120, 0.9999, 0.9702),
    (129, 1.0049, 0.9878),
    (130, 0.9999, 0.9724),
    (139, 1.0048, 0.9887),
    (140, 1.0000, 0.9743),
    (149, 1.0045, 0.9895),
    (150, 1.0000, 0.9761),
    (159, 1.0041, 0.9901),
    (160, 1.0000, 0.9775),
    (169, 1.0039, 0.9907),
    (170, 1.0001, 0.9788),
    (179, 1.0037, 0.9912),
    (180, 1.0000, 0.9800),
    (189, 1.0035, 0.9916),
    (190, 1.0001, 0.9809),
    (199, 1.0034, 0.9921),
    (200, 1.0000, 0.9819),
    (249, 1.0027, 0.9937),
    (250, 1.0000, 0.9855),
    (299, 1.0023, 0.9947),
    (300, 1.0001, 0.9879),
    (349, 1.0020, 0.9954),
    (350, 1.0001, 0.9896),
    (399, 1.0017, 0.9960),
    (400, 1.0001, 0.9909),
    (449, 1.0016, 0.9965),
    (450, 1.0000, 0.9919),
    (499, 1.0014, 0.9968),
    (500, 1.0000, 0.9927),
    (549, 1.0013, 0.9971),
    (550, 1.0001, 0.9934),
    (599, 1.0011, 0.9974),
    (600, 1.0000, 0.9939),
    (649, 1.0011, 0.9975),
    (650, 1.0001, 0.9944),
    (699, 1.0010, 0.9977),
    (700, 1.0001, 0.9948),
    (749, 1.0010, 0.9979),
    (750, 1.0001, 0.9952),
    (799, 1.0009, 0.9981),
    (800, 1.0001, 0.9954),
    (849, 1.0008, 0.9981),
    (850, 1.0001, 0.9957),
    (899, 1.0008, 0.9982),
    (900, 1.0000, 0.9959),
    (949, 1.0007, 0.9983),
    (950, 1.0001, 0.9961),
    (999, 1.0007, 0.9984),
    (1000, 1.0000, 0.9963),
    (1049, 1.0006, 0.9985),
    (1050, 1.0001, 0.9965),
    (1099, 1.0007, 0.9985),
    (1100, 1.0000, 0.9967),
    (1149, 1.0006, 0.9986),
    (1150, 1.0000, 0.9968),
    (1199, 1.0006, 0.9987),
    (1200, 1.0001, 0.9970),
    (1249, 1.0006, 0.9987),
    (1250, 1.0000, 0.9971),
    (1299, 1.0006, 0.9988),
    (1300, 1.0000, 0.9972),
    (1499, 1.0005, 0.9989),
    (1500, 1.0000, 0.9976),
    (1999, 1.0004, 0.9992),
    (2000, 1.0000, 0.9982),
    (2499, 1.0003, 0.9993),
    (2500, 1.0000, 0.9985),
    (2999, 1.0002, 0.9995),
    (3000, 1.0000, 0.9988),
    (3499, 1.0002, 0.9996),
    (3500, 1.0000, 0.9990),
    (3999, 1.0002, 0.9996),
    (4000, 1.0000, 0.9991),
    (4499, 1.0002, 0.9996),
    (4500, 1.0000, 0.9992),
    (4999, 1.0001, 0.9997),
    (5000, 1.0000, 0.9993),
    (5499, 1.0001, 0.9997),
    (5500, 1.0000, 0.9993),
    (5999, 1.0001, 0.9997),
    (6000, 1.0000, 0.9994),
    (6499, 1.0001, 0.9998),
    (6500, 1.0000, 0.9994),
    (6999, 1.0001, 0.9998),
    (7000, 1.0000, 0.9995),
    (7499, 1.0001, 0.9998),
    (7500, 1.0000, 0.9995),
    (7999, 1.0001, 0.9998),
    (8000, 1.0000, 0.9995),
    (8499, 1.0001, 0.9998),
    (8500, 1.0000, 0.9996),
    (8999, 1.0001, 0.9998),
    (9000, 1.0000, 0.9996),
    (9499, 1.0001, 0.9998),
    (9500, 1.0000, 0.9996),
    (9999, 1.0001, 0.9998),
    (10000, 1.0000, 0.9996),
)

# Published finite-sample Gaussian efficiency: (n, MAD, Sn, Qn).
PUBLISHED_EFFICIENCY = (
    (2, 1.0000, 1.0000, 1.0000),
    (3, 0.4005, 0.4005, 0.4005),
    (4, 0.5451, 0.6085, 0.6085),
    (5, 0.3859, 0.4360, 0.4571),
    (6, 0.4633, 0.5311, 0.6118),
    (7, 0.3791, 0.4713, 0.5096),
    (8, 0.4336, 0.5112, 0.6223),
    (9, 0.3760, 0.4992, 0.5557),
    (10, 0.4180, 0.5093, 0.6341),
    (11, 0.3741, 0.5199, 0.5822),
    (12, 0.4082, 0.5132, 0.6460),
    (13, 0.3728, 0.5352, 0.6039),
    (14, 0.4018, 0.5203, 0.6563),
    (15, 0.3723, 0.5464, 0.6223),
    (16, 0.3972, 0.5275, 0.6660),
    (17, 0.3716, 0.5549, 0.6374),
    (18, 0.3938, 0.5342, 0.6746),
    (19, 0.3710, 0.5615, 0.6505),
    (20, 0.3905, 0.5395, 0.6819),
    (21, 0.3712, 0.5668, 0.6623),
    (22, 0.3884, 0.5452, 0.6898),
    (23, 0.3705, 0.5706, 0.6717),
    (24, 0.3867, 0.5500, 0.6965),
    (25, 0.3701, 0.5737, 0.6805),
    (26, 0.3848, 0.5533, 0.7020),
    (27, 0.3697, 0.5762, 0.6880),
    (28, 0.3835, 0.5571, 0.7077),
    (29, 0.3700, 0.5789, 0.6955),
    (30, 0.3823, 0.5599, 0.7125),
    (31, 0.3695, 0.5811, 0.7019),
    (32, 0.3819, 0.5629, 0.7175),
    (33, 0.3696, 0.5829, 0.7076),
    (34, 0.3807, 0.5652, 0.7219),
    (35, 0.3695, 0.5840, 0.7126),
    (36, 0.3800, 0.5671, 0.7260),
    (37, 0.3693, 0.5851, 0.7173),
    (38, 0.3792, 0.5690, 0.7296),
    (39, 0.3692, 0.5862, 0.7218),
    (40, 0.3786, 0.5706, 0.7330),
    (41, 0.3691, 0.5870, 0.7255),
    (42, 0.3779, 0.5720, 0.7360),
    (43, 0.3690, 0.5875, 0.7295),
    (44, 0.3775, 0.5733, 0.7389),
    (45, 0.3688, 0.5883, 0.7326),
    (46, 0.3769, 0.5743, 0.7415),
    (47, 0.3689, 0.5889, 0.7362),
    (48, 0.3766, 0.5757, 0.7442),
    (49, 0.3688, 0.5893, 0.7388),
    (50, 0.3765, 0.5767, 0.7467),
    (51, 0.3690, 0.5900, 0.7417),
    (52, 0.3761, 0.5777, 0.7492),
    (53, 0.3687, 0.5901, 0.7440),
    (54, 0.3756, 0.5782, 0.7511),
    (55, 0.3690, 0.5908, 0.7469),
    (56, 0.3754, 0.5788, 0.7533),
    (57, 0.3691, 0.5913, 0.7493),
    (58, 0.3749, 0.5793, 0.7549),
    (59, 0.3688, 0.5907, 0.7510),
    (60, 0.3754, 0.5806, 0.7571),
    (61, 0.3685, 0.5911, 0.7533),
    (62, 0.3746, 0.5805, 0.7584),
    (63, 0.3689, 0.5914, 0.7553),
    (64, 0.3745, 0.5813, 0.7602),
    (65, 0.3685, 0.5911, 0.7566),
    (66, 0.3743, 0.5816, 0.7619),
    (67, 0.3681, 0.5913, 0.7584),
    (68, 0.3740, 0.5818, 0.7631),
    (69, 0.3687, 0.5918, 0.7602),
    (70, 0.3738, 0.5823, 0.7645),
    (71, 0.3684, 0.5914, 0.7617),
    (72, 0.3739, 0.5828, 0.7665),
    (73, 0.3685, 0.5919, 0.7631),
    (74, 0.3734, 0.5830, 0.7669),
    (75, 0.3686, 0.5918, 0.7645),
    (76, 0.3734, 0.5834, 0.7687),
    (77, 0.3682, 0.5914, 0.7655),
    (78, 0.3729, 0.5833, 0.7696),
    (79, 0.3684, 0.5919, 0.7672),
    (80, 0.3729, 0.5838, 0.7707),
    (81, 0.3683, 0.5917, 0.7682),
    (82, 0.3726, 0.5836, 0.7716),
    (83, 0.3685, 0.5919, 0.7696),
    (84, 0.3728, 0.5843, 0.7727),
    (85, 0.3682, 0.5915, 0.7705),
    (86, 0.3724, 0.5840, 0.7739),
    (87, 0.3685, 0.5920, 0.7719),
    (88, 0.3723, 0.5840, 0.7740),
    (89, 0.3685, 0.5922, 0.7730),
    (90, 0.3725, 0.5845, 0.7755),
    (91, 0.3684, 0.5920, 0.7737),
    (92, 0.3718, 0.5841, 0.7761),
    (93, 0.3681, 0.5915, 0.7741),
    (94, 0.3723, 0.5850, 0.7776),
    (95, 0.3686, 0.5917, 0.7755),
    (96, 0.3719, 0.5846, 0.7779),
    (97, 0.3683, 0.5921, 0.7763),
    (98, 0.3720, 0.5849, 0.7788),
    (99, 0.3681, 0.5915, 0.7771),
    (100, 0.3716, 0.5848, 0.7795),
    (109, 0.3685, 0.5919, 0.7815),
    (110, 0.3722, 0.5856, 0.7833),
    (119, 0.3680, 0.5910, 0.7844),
    (120, 0.3716, 0.5857, 0.7861),
    (129, 0.3679, 0.5903, 0.7865),
    (130, 0.3712, 0.5861, 0.7884),
    (139, 0.3678, 0.5901, 0.7889),
    (140, 0.3706, 0.5853, 0.7902),
    (149, 0.3688, 0.5911, 0.7913),
    (150, 0.3709, 0.5866, 0.7926),
    (159, 0.3675, 0.5892, 0.7920),
    (160, 0.3703, 0.5861, 0.7948),
    (169, 0.3680, 0.5898, 0.7948),
    (170, 0.3701, 0.5857, 0.7963),
    (179, 0.3679, 0.5894, 0.7960),
    (180, 0.3703, 0.5859, 0.7974),
    (189, 0.3682, 0.5891, 0.7978),
    (190, 0.3699, 0.5855, 0.7981),
    (199, 0.3677, 0.5888, 0.7992),
    (200, 0.3693, 0.5845, 0.7990),
    (249, 0.3679, 0.5880, 0.8030),
    (250, 0.3692, 0.5853, 0.8038),
    (299, 0.3680, 0.5872, 0.8063),
    (300, 0.3693, 0.5851, 0.8059),
    (349, 0.3676, 0.5864, 0.8076),
    (350, 0.3686, 0.5846, 0.8079),
    (399, 0.3671, 0.5854, 0.8098),
    (400, 0.3686, 0.5840, 0.8100),
    (449, 0.3674, 0.5858, 0.8109),
    (450, 0.3689, 0.5849, 0.8116),
    (499, 0.3672, 0.5851, 0.8114),
    (500, 0.3684, 0.5842, 0.8123),
    (600, 0.3685, 0.5836, 0.8138),
    (700, 0.3690, 0.5842, 0.8151),
    (800, 0.3674, 0.5827, 0.8153),
    (900, 0.3693, 0.5847, 0.8168),
    (1000, 0.3674, 0.5823, 0.8159),
    (1500, 0.3682, 0.5832, 0.8182),
    (2000, 0.3684, 0.5824, 0.8200),
    (3000, 0.3681, 0.5818, 0.8192),
    (4000, 0.3675, 0.5817, 0.8193),
    (5000, 0.3673, 0.5809, 0.8194),
    (6000, 0.3683, 0.5821, 0.8207),
    (7000, 0.3674, 0.5820, 0.8205),
    (8000, 0.3677, 0.5820, 0.8210),
    (9000, 0.3666, 0.5813, 0.8196),
    (10000, 0.3678, 0.5821, 0.8207),
    (25000, 0.3679, 0.5819, 0.8204),
    (50000, 0.3681, 0.5830, 0.8214),
    (100000, 0.3680, 0.5821, 0.8211),
)
