"""Values recomputed by tests/oracle/sympy_oracle.py (sympy, no qjstirling import)."""

from fractions import Fraction

POINTS = (Fraction(2, 1), Fraction(3, 1), Fraction(1, 3))

FROZEN = {'asc_-1_P3': ((Fraction(0, 1), Fraction(0, 1), Fraction(0, 1)),
               (Fraction(7, 1), Fraction(26, 1), Fraction(-26, 27)),
               (Fraction(0, 1), Fraction(0, 1), Fraction(0, 1)),
               (Fraction(1, 1), Fraction(1, 1), Fraction(1, 1))),
 'asc_-1_P4': ((Fraction(28, 1), Fraction(468, 1), Fraction(52, 729)),
               (Fraction(0, 1), Fraction(0, 1), Fraction(0, 1)),
               (Fraction(35, 1), Fraction(260, 1), Fraction(-260, 243)),
               (Fraction(0, 1), Fraction(0, 1), Fraction(0, 1)),
               (Fraction(1, 1), Fraction(1, 1), Fraction(1, 1))),
 'asc_-1_chi3': (Fraction(7, 4), Fraction(13, 18), Fraction(-39, 2)),
 'asc_-1_chi4': (Fraction(15, 8), Fraction(20, 27), Fraction(-60, 1)),
 'asc_2_P3': ((Fraction(-156, 1), Fraction(-477, 1), Fraction(-29, 9)),
              (Fraction(112, 1), Fraction(299, 1), Fraction(169, 27)),
              (Fraction(-21, 1), Fraction(-39, 1), Fraction(-13, 3)),
              (Fraction(1, 1), Fraction(1, 1), Fraction(1, 1))),
 'asc_2_P4': ((Fraction(2848, 1), Fraction(27873, 1), Fraction(937, 729)),
              (Fraction(-2340, 1), Fraction(-19080, 1), Fraction(-1160, 243)),
              (Fraction(560, 1), Fraction(2990, 1), Fraction(1690, 243)),
              (Fraction(-45, 1), Fraction(-120, 1), Fraction(-40, 9)),
              (Fraction(1, 1), Fraction(1, 1), Fraction(1, 1))),
 'asc_2_chi3': (Fraction(-7, 8), Fraction(-13, 36), Fraction(39, 4)),
 'asc_2_chi4': (Fraction(-15, 16), Fraction(-10, 27), Fraction(30, 1)),
 'central_U_5_3': {(-4,): Fraction(1, 1),
                   (-3,): Fraction(5, 1),
                   (-2,): Fraction(16, 1),
                   (-1,): Fraction(31, 1),
                   (0,): Fraction(41, 1),
                   (1,): Fraction(31, 1),
                   (2,): Fraction(16, 1),
                   (3,): Fraction(5, 1),
                   (4,): Fraction(1, 1)},
 'central_V_5_3': {(-5,): Fraction(1, 1),
                   (-4,): Fraction(5, 1),
                   (-3,): Fraction(16, 1),
                   (-2,): Fraction(33, 1),
                   (-1,): Fraction(51, 1),
                   (0,): Fraction(61, 1),
                   (1,): Fraction(51, 1),
                   (2,): Fraction(33, 1),
                   (3,): Fraction(16, 1),
                   (4,): Fraction(5, 1),
                   (5,): Fraction(1, 1)},
 'lqj_half_third_P2': ((Fraction(0, 1), Fraction(3, 25), Fraction(4131, 15617)),
                       (Fraction(-9, 5), Fraction(-28, 25), Fraction(-612, 485)),
                       (Fraction(1, 1), Fraction(1, 1), Fraction(1, 1))),
 'lqj_half_third_P3': ((Fraction(0, 1), Fraction(-189, 19039), Fraction(-17734383, 618031717)),
                       (Fraction(378, 377), Fraction(6825, 19039), Fraction(2846259, 6371461)),
                       (Fraction(-63, 29), Fraction(-325, 241), Fraction(-6201, 4373)),
                       (Fraction(1, 1), Fraction(1, 1), Fraction(1, 1))),
 'lqj_half_third_chi2': (Fraction(3, 4), Fraction(14, 9), Fraction(322, 1)),
 'lqj_half_third_chi3': (Fraction(35, 8), Fraction(325, 54), Fraction(6305, 6)),
 'lqj_q_q2_P2': ((Fraction(2, 381), Fraction(3, 7651), Fraction(2187, 7651)),
                 (Fraction(-21, 127), Fraction(-52, 1093), Fraction(-1404, 1093)),
                 (Fraction(1, 1), Fraction(1, 1), Fraction(1, 1))),
 'lqj_q_q2_P3': ((Fraction(-24, 157607), Fraction(-54, 33923441), Fraction(-1062882, 33923441)),
                 (Fraction(14, 1241), Fraction(39, 62074), Fraction(28431, 62074)),
                 (Fraction(-15, 73), Fraction(-40, 757), Fraction(-1080, 757)),
                 (Fraction(1, 1), Fraction(1, 1), Fraction(1, 1))),
 'lqj_q_q2_chi2': (Fraction(189, 64), Fraction(1456, 729), Fraction(1456, 1)),
 'lqj_q_q2_chi3': (Fraction(889, 128), Fraction(14209, 2187), Fraction(14209, 3)),
 'qjs_first_4_2': {(0, -3): Fraction(1, 1),
                   (0, -2): Fraction(5, 1),
                   (0, -1): Fraction(11, 1),
                   (0, 0): Fraction(15, 1),
                   (0, 1): Fraction(11, 1),
                   (0, 2): Fraction(5, 1),
                   (0, 3): Fraction(1, 1),
                   (1, -2): Fraction(2, 1),
                   (1, -1): Fraction(7, 1),
                   (1, 0): Fraction(15, 1),
                   (1, 1): Fraction(14, 1),
                   (1, 2): Fraction(8, 1),
                   (1, 3): Fraction(2, 1),
                   (2, 0): Fraction(3, 1),
                   (2, 1): Fraction(4, 1),
                   (2, 2): Fraction(3, 1),
                   (2, 3): Fraction(1, 1)},
 'qjs_first_5_2': {(0, -6): Fraction(1, 1),
                   (0, -5): Fraction(7, 1),
                   (0, -4): Fraction(24, 1),
                   (0, -3): Fraction(57, 1),
                   (0, -2): Fraction(101, 1),
                   (0, -1): Fraction(141, 1),
                   (0, 0): Fraction(158, 1),
                   (0, 1): Fraction(141, 1),
                   (0, 2): Fraction(101, 1),
                   (0, 3): Fraction(57, 1),
                   (0, 4): Fraction(24, 1),
                   (0, 5): Fraction(7, 1),
                   (0, 6): Fraction(1, 1),
                   (1, -5): Fraction(2, 1),
                   (1, -4): Fraction(11, 1),
                   (1, -3): Fraction(37, 1),
                   (1, -2): Fraction(84, 1),
                   (1, -1): Fraction(144, 1),
                   (1, 0): Fraction(195, 1),
                   (1, 1): Fraction(204, 1),
                   (1, 2): Fraction(169, 1),
                   (1, 3): Fraction(110, 1),
                   (1, 4): Fraction(53, 1),
                   (1, 5): Fraction(18, 1),
                   (1, 6): Fraction(3, 1),
                   (2, -3): Fraction(3, 1),
                   (2, -2): Fraction(13, 1),
                   (2, -1): Fraction(33, 1),
                   (2, 0): Fraction(64, 1),
                   (2, 1): Fraction(85, 1),
                   (2, 2): Fraction(85, 1),
                   (2, 3): Fraction(66, 1),
                   (2, 4): Fraction(37, 1),
                   (2, 5): Fraction(15, 1),
                   (2, 6): Fraction(3, 1),
                   (3, 0): Fraction(4, 1),
                   (3, 1): Fraction(9, 1),
                   (3, 2): Fraction(12, 1),
                   (3, 3): Fraction(12, 1),
                   (3, 4): Fraction(8, 1),
                   (3, 5): Fraction(4, 1),
                   (3, 6): Fraction(1, 1)},
 'qjs_first_5_3': {(0, -5): Fraction(1, 1),
                   (0, -4): Fraction(5, 1),
                   (0, -3): Fraction(16, 1),
                   (0, -2): Fraction(33, 1),
                   (0, -1): Fraction(51, 1),
                   (0, 0): Fraction(61, 1),
                   (0, 1): Fraction(51, 1),
                   (0, 2): Fraction(33, 1),
                   (0, 3): Fraction(16, 1),
                   (0, 4): Fraction(5, 1),
                   (0, 5): Fraction(1, 1),
                   (1, -3): Fraction(3, 1),
                   (1, -2): Fraction(11, 1),
                   (1, -1): Fraction(25, 1),
                   (1, 0): Fraction(45, 1),
                   (1, 1): Fraction(47, 1),
                   (1, 2): Fraction(37, 1),
                   (1, 3): Fraction(22, 1),
                   (1, 4): Fraction(8, 1),
                   (1, 5): Fraction(2, 1),
                   (2, 0): Fraction(6, 1),
                   (2, 1): Fraction(9, 1),
                   (2, 2): Fraction(9, 1),
                   (2, 3): Fraction(7, 1),
                   (2, 4): Fraction(3, 1),
                   (2, 5): Fraction(1, 1)},
 'qjs_first_6_3': {(0, -9): Fraction(1, 1),
                   (0, -8): Fraction(7, 1),
                   (0, -7): Fraction(29, 1),
                   (0, -6): Fraction(85, 1),
                   (0, -5): Fraction(197, 1),
                   (0, -4): Fraction(379, 1),
                   (0, -3): Fraction(618, 1),
                   (0, -2): Fraction(869, 1),
                   (0, -1): Fraction(1066, 1),
                   (0, 0): Fraction(1143, 1),
                   (0, 1): Fraction(1066, 1),
                   (0, 2): Fraction(869, 1),
                   (0, 3): Fraction(618, 1),
                   (0, 4): Fraction(379, 1),
                   (0, 5): Fraction(197, 1),
                   (0, 6): Fraction(85, 1),
                   (0, 7): Fraction(29, 1),
                   (0, 8): Fraction(7, 1),
                   (0, 9): Fraction(1, 1),
                   (1, -7): Fraction(3, 1),
                   (1, -6): Fraction(17, 1),
                   (1, -5): Fraction(59, 1),
                   (1, -4): Fraction(157, 1),
                   (1, -3): Fraction(330, 1),
                   (1, -2): Fraction(572, 1),
                   (1, -1): Fraction(845, 1),
                   (1, 0): Fraction(1076, 1),
                   (1, 1): Fraction(1163, 1),
                   (1, 2): Fraction(1083, 1),
                   (1, 3): Fraction(874, 1),
                   (1, 4): Fraction(605, 1),
                   (1, 5): Fraction(353, 1),
                   (1, 6): Fraction(171, 1),
                   (1, 7): Fraction(66, 1),
                   (1, 8): Fraction(18, 1),
                   (1, 9): Fraction(3, 1),
                   (2, -4): Fraction(6, 1),
                   (2, -3): Fraction(27, 1),
                   (2, -2): Fraction(72, 1),
                   (2, -1): Fraction(148, 1),
                   (2, 0): Fraction(258, 1),
                   (2, 1): Fraction(349, 1),
                   (2, 2): Fraction(388, 1),
                   (2, 3): Fraction(367, 1),
                   (2, 4): Fraction(294, 1),
                   (2, 5): Fraction(196, 1),
                   (2, 6): Fraction(108, 1),
                   (2, 7): Fraction(48, 1),
                   (2, 8): Fraction(15, 1),
                   (2, 9): Fraction(3, 1),
                   (3, 0): Fraction(10, 1),
                   (3, 1): Fraction(24, 1),
                   (3, 2): Fraction(36, 1),
                   (3, 3): Fraction(43, 1),
                   (3, 4): Fraction(42, 1),
                   (3, 5): Fraction(33, 1),
                   (3, 6): Fraction(21, 1),
                   (3, 7): Fraction(11, 1),
                   (3, 8): Fraction(4, 1),
                   (3, 9): Fraction(1, 1)},
 'qjs_first_6_4': {(0, -7): Fraction(1, 1),
                   (0, -6): Fraction(5, 1),
                   (0, -5): Fraction(16, 1),
                   (0, -4): Fraction(40, 1),
                   (0, -3): Fraction(77, 1),
                   (0, -2): Fraction(121, 1),
                   (0, -1): Fraction(161, 1),
                   (0, 0): Fraction(181, 1),
                   (0, 1): Fraction(161, 1),
                   (0, 2): Fraction(121, 1),
                   (0, 3): Fraction(77, 1),
                   (0, 4): Fraction(40, 1),
                   (0, 5): Fraction(16, 1),
                   (0, 6): Fraction(5, 1),
                   (0, 7): Fraction(1, 1),
                   (1, -4): Fraction(4, 1),
                   (1, -3): Fraction(15, 1),
                   (1, -2): Fraction(35, 1),
                   (1, -1): Fraction(65, 1),
                   (1, 0): Fraction(105, 1),
                   (1, 1): Fraction(115, 1),
                   (1, 2): Fraction(103, 1),
                   (1, 3): Fraction(78, 1),
                   (1, 4): Fraction(48, 1),
                   (1, 5): Fraction(22, 1),
                   (1, 6): Fraction(8, 1),
                   (1, 7): Fraction(2, 1),
                   (2, 0): Fraction(10, 1),
                   (2, 1): Fraction(16, 1),
                   (2, 2): Fraction(18, 1),
                   (2, 3): Fraction(17, 1),
                   (2, 4): Fraction(13, 1),
                   (2, 5): Fraction(7, 1),
                   (2, 6): Fraction(3, 1),
                   (2, 7): Fraction(1, 1)},
 'qjs_second_4_2': {(0, -2): Fraction(1, 1),
                    (0, -1): Fraction(5, 1),
                    (0, 0): Fraction(9, 1),
                    (0, 1): Fraction(5, 1),
                    (0, 2): Fraction(1, 1),
                    (1, -1): Fraction(3, 1),
                    (1, 0): Fraction(11, 1),
                    (1, 1): Fraction(8, 1),
                    (1, 2): Fraction(2, 1),
                    (2, 0): Fraction(3, 1),
                    (2, 1): Fraction(3, 1),
                    (2, 2): Fraction(1, 1)},
 'qjs_second_5_2': {(0, -3): Fraction(1, 1),
                    (0, -2): Fraction(7, 1),
                    (0, -1): Fraction(20, 1),
                    (0, 0): Fraction(29, 1),
                    (0, 1): Fraction(20, 1),
                    (0, 2): Fraction(7, 1),
                    (0, 3): Fraction(1, 1),
                    (1, -2): Fraction(4, 1),
                    (1, -1): Fraction(23, 1),
                    (1, 0): Fraction(50, 1),
                    (1, 1): Fraction(43, 1),
                    (1, 2): Fraction(18, 1),
                    (1, 3): Fraction(3, 1),
                    (2, -1): Fraction(6, 1),
                    (2, 0): Fraction(26, 1),
                    (2, 1): Fraction(29, 1),
                    (2, 2): Fraction(15, 1),
                    (2, 3): Fraction(3, 1),
                    (3, 0): Fraction(4, 1),
                    (3, 1): Fraction(6, 1),
                    (3, 2): Fraction(4, 1),
                    (3, 3): Fraction(1, 1)},
 'qjs_second_5_3': {(0, -4): Fraction(1, 1),
                    (0, -3): Fraction(5, 1),
                    (0, -2): Fraction(16, 1),
                    (0, -1): Fraction(31, 1),
                    (0, 0): Fraction(41, 1),
                    (0, 1): Fraction(31, 1),
                    (0, 2): Fraction(16, 1),
                    (0, 3): Fraction(5, 1),
                    (0, 4): Fraction(1, 1),
                    (1, -2): Fraction(4, 1),
                    (1, -1): Fraction(15, 1),
                    (1, 0): Fraction(35, 1),
                    (1, 1): Fraction(34, 1),
                    (1, 2): Fraction(22, 1),
                    (1, 3): Fraction(8, 1),
                    (1, 4): Fraction(2, 1),
                    (2, 0): Fraction(6, 1),
                    (2, 1): Fraction(8, 1),
                    (2, 2): Fraction(7, 1),
                    (2, 3): Fraction(3, 1),
                    (2, 4): Fraction(1, 1)},
 'qjs_second_6_3': {(0, -6): Fraction(1, 1),
                    (0, -5): Fraction(7, 1),
                    (0, -4): Fraction(29, 1),
                    (0, -3): Fraction(81, 1),
                    (0, -2): Fraction(169, 1),
                    (0, -1): Fraction(263, 1),
                    (0, 0): Fraction(308, 1),
                    (0, 1): Fraction(263, 1),
                    (0, 2): Fraction(169, 1),
                    (0, 3): Fraction(81, 1),
                    (0, 4): Fraction(29, 1),
                    (0, 5): Fraction(7, 1),
                    (0, 6): Fraction(1, 1),
                    (1, -4): Fraction(5, 1),
                    (1, -3): Fraction(29, 1),
                    (1, -2): Fraction(103, 1),
                    (1, -1): Fraction(232, 1),
                    (1, 0): Fraction(367, 1),
                    (1, 1): Fraction(385, 1),
                    (1, 2): Fraction(293, 1),
                    (1, 3): Fraction(161, 1),
                    (1, 4): Fraction(66, 1),
                    (1, 5): Fraction(18, 1),
                    (1, 6): Fraction(3, 1),
                    (2, -2): Fraction(10, 1),
                    (2, -1): Fraction(45, 1),
                    (2, 0): Fraction(121, 1),
                    (2, 1): Fraction(166, 1),
                    (2, 2): Fraction(156, 1),
                    (2, 3): Fraction(100, 1),
                    (2, 4): Fraction(48, 1),
                    (2, 5): Fraction(15, 1),
                    (2, 6): Fraction(3, 1),
                    (3, 0): Fraction(10, 1),
                    (3, 1): Fraction(20, 1),
                    (3, 2): Fraction(25, 1),
                    (3, 3): Fraction(19, 1),
                    (3, 4): Fraction(11, 1),
                    (3, 5): Fraction(4, 1),
                    (3, 6): Fraction(1, 1)},
 'qjs_second_6_4': {(0, -6): Fraction(1, 1),
                    (0, -5): Fraction(5, 1),
                    (0, -4): Fraction(16, 1),
                    (0, -3): Fraction(40, 1),
                    (0, -2): Fraction(75, 1),
                    (0, -1): Fraction(111, 1),
                    (0, 0): Fraction(131, 1),
                    (0, 1): Fraction(111, 1),
                    (0, 2): Fraction(75, 1),
                    (0, 3): Fraction(40, 1),
                    (0, 4): Fraction(16, 1),
                    (0, 5): Fraction(5, 1),
                    (0, 6): Fraction(1, 1),
                    (1, -3): Fraction(5, 1),
                    (1, -2): Fraction(19, 1),
                    (1, -1): Fraction(45, 1),
                    (1, 0): Fraction(85, 1),
                    (1, 1): Fraction(91, 1),
                    (1, 2): Fraction(75, 1),
                    (1, 3): Fraction(48, 1),
                    (1, 4): Fraction(22, 1),
                    (1, 5): Fraction(8, 1),
                    (1, 6): Fraction(2, 1),
                    (2, 0): Fraction(10, 1),
                    (2, 1): Fraction(15, 1),
                    (2, 2): Fraction(16, 1),
                    (2, 3): Fraction(13, 1),
                    (2, 4): Fraction(7, 1),
                    (2, 5): Fraction(3, 1),
                    (2, 6): Fraction(1, 1)},
 'qstirling_first_5_2': {(0,): Fraction(4, 1),
                         (1,): Fraction(9, 1),
                         (2,): Fraction(12, 1),
                         (3,): Fraction(12, 1),
                         (4,): Fraction(8, 1),
                         (5,): Fraction(4, 1),
                         (6,): Fraction(1, 1)},
 'qstirling_first_6_3': {(0,): Fraction(10, 1),
                         (1,): Fraction(24, 1),
                         (2,): Fraction(36, 1),
                         (3,): Fraction(43, 1),
                         (4,): Fraction(42, 1),
                         (5,): Fraction(33, 1),
                         (6,): Fraction(21, 1),
                         (7,): Fraction(11, 1),
                         (8,): Fraction(4, 1),
                         (9,): Fraction(1, 1)},
 'qstirling_first_7_4': {(0,): Fraction(20, 1),
                         (1,): Fraction(50, 1),
                         (2,): Fraction(80, 1),
                         (3,): Fraction(104, 1),
                         (4,): Fraction(116, 1),
                         (5,): Fraction(114, 1),
                         (6,): Fraction(95, 1),
                         (7,): Fraction(70, 1),
                         (8,): Fraction(45, 1),
                         (9,): Fraction(25, 1),
                         (10,): Fraction(11, 1),
                         (11,): Fraction(4, 1),
                         (12,): Fraction(1, 1)},
 'qstirling_second_5_2': {(0,): Fraction(4, 1),
                          (1,): Fraction(6, 1),
                          (2,): Fraction(4, 1),
                          (3,): Fraction(1, 1)},
 'qstirling_second_6_3': {(0,): Fraction(10, 1),
                          (1,): Fraction(20, 1),
                          (2,): Fraction(25, 1),
                          (3,): Fraction(19, 1),
                          (4,): Fraction(11, 1),
                          (5,): Fraction(4, 1),
                          (6,): Fraction(1, 1)},
 'qstirling_second_7_4': {(0,): Fraction(20, 1),
                          (1,): Fraction(45, 1),
                          (2,): Fraction(66, 1),
                          (3,): Fraction(73, 1),
                          (4,): Fraction(62, 1),
                          (5,): Fraction(43, 1),
                          (6,): Fraction(25, 1),
                          (7,): Fraction(11, 1),
                          (8,): Fraction(4, 1),
                          (9,): Fraction(1, 1)},
 'sw_chi2': (Fraction(5, 3), Fraction(5, 4), Fraction(-5, 4)),
 'sw_chi3': (Fraction(7, 1), Fraction(91, 8), Fraction(-91, 72)),
 'sw_chi4': (Fraction(85, 3), Fraction(205, 2), Fraction(-205, 162)),
 'sym_first_4_2': {(0, 0): Fraction(49, 1),
                   (0, 1): Fraction(48, 1),
                   (0, 2): Fraction(11, 1),
                   (1, 0): Fraction(48, 1),
                   (1, 1): Fraction(64, 1),
                   (1, 2): Fraction(18, 1),
                   (2, 0): Fraction(11, 1),
                   (2, 1): Fraction(18, 1),
                   (2, 2): Fraction(6, 1)},
 'sym_second_4_2': {(0, 0): Fraction(21, 1),
                    (0, 1): Fraction(24, 1),
                    (0, 2): Fraction(7, 1),
                    (1, 0): Fraction(24, 1),
                    (1, 1): Fraction(34, 1),
                    (1, 2): Fraction(12, 1),
                    (2, 0): Fraction(7, 1),
                    (2, 1): Fraction(12, 1),
                    (2, 2): Fraction(6, 1)},
 'wilson_first_4_2': {(0,): Fraction(49, 1),
                      (1,): Fraction(96, 1),
                      (2,): Fraction(86, 1),
                      (3,): Fraction(36, 1),
                      (4,): Fraction(6, 1)},
 'wilson_second_4_2': {(0,): Fraction(21, 1),
                       (1,): Fraction(48, 1),
                       (2,): Fraction(48, 1),
                       (3,): Fraction(24, 1),
                       (4,): Fraction(6, 1)}}
