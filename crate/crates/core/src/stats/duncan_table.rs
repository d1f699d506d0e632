// Duncan significant studentized ranges at alpha = 0.05.
//
// Row `df - 1` for error degrees of freedom 1..=120, then one row for
// infinite df. Column `p - 2` for spans p = 2..=20. Each entry is the upper
// quantile of the studentized range for p means at the protection level
// 1 - 0.95^(p - 1), made non-decreasing in p, rounded to four decimals.

pub(super) const MAX_SPAN: usize = 20;
pub(super) const MAX_DF: usize = 120;

#[rustfmt::skip]
pub(super) const SSR_05: [[f64; MAX_SPAN - 1]; MAX_DF + 1] = [
    [17.9693, 17.9693, 17.9693, 17.9693, 17.9693, 17.9693, 17.9693, 17.9693, 17.9693, 17.9693, 17.9693, 17.9693, 17.9693, 17.9693, 17.9693, 17.9693, 17.9693, 17.9693, 17.9693],
    [6.0849, 6.0849, 6.0849, 6.0849, 6.0849, 6.0849, 6.0849, 6.0849, 6.0849, 6.0849, 6.0849, 6.0849, 6.0849, 6.0849, 6.0849, 6.0849, 6.0849, 6.0849, 6.0849],
    [4.5007, 4.5156, 4.5156, 4.5156, 4.5156, 4.5156, 4.5156, 4.5156, 4.5156, 4.5156, 4.5156, 4.5156, 4.5156, 4.5156, 4.5156, 4.5156, 4.5156, 4.5156, 4.5156],
    [3.9265, 4.0125, 4.0331, 4.0331, 4.0331, 4.0331, 4.0331, 4.0331, 4.0331, 4.0331, 4.0331, 4.0331, 4.0331, 4.0331, 4.0331, 4.0331, 4.0331, 4.0331, 4.0331],
    [3.6354, 3.7485, 3.7965, 3.8137, 3.8144, 3.8144, 3.8144, 3.8144, 3.8144, 3.8144, 3.8144, 3.8144, 3.8144, 3.8144, 3.8144, 3.8144, 3.8144, 3.8144, 3.8144],
    [3.4605, 3.5865, 3.6489, 3.6802, 3.6941, 3.6973, 3.6973, 3.6973, 3.6973, 3.6973, 3.6973, 3.6973, 3.6973, 3.6973, 3.6973, 3.6973, 3.6973, 3.6973, 3.6973],
    [3.3441, 3.4772, 3.5483, 3.5883, 3.6106, 3.6217, 3.6255, 3.6255, 3.6255, 3.6255, 3.6255, 3.6255, 3.6255, 3.6255, 3.6255, 3.6255, 3.6255, 3.6255, 3.6255],
    [3.2612, 3.3985, 3.4752, 3.5212, 3.5493, 3.5660, 3.5750, 3.5787, 3.5787, 3.5787, 3.5787, 3.5787, 3.5787, 3.5787, 3.5787, 3.5787, 3.5787, 3.5787, 3.5787],
    [3.1992, 3.3391, 3.4198, 3.4700, 3.5023, 3.5231, 3.5361, 3.5436, 3.5470, 3.5474, 3.5474, 3.5474, 3.5474, 3.5474, 3.5474, 3.5474, 3.5474, 3.5474, 3.5474],
    [3.1511, 3.2928, 3.3763, 3.4297, 3.4652, 3.4891, 3.5052, 3.5156, 3.5218, 3.5248, 3.5254, 3.5254, 3.5254, 3.5254, 3.5254, 3.5254, 3.5254, 3.5254, 3.5254],
    [3.1127, 3.2557, 3.3413, 3.3971, 3.4351, 3.4615, 3.4800, 3.4927, 3.5012, 3.5064, 3.5091, 3.5098, 3.5098, 3.5098, 3.5098, 3.5098, 3.5098, 3.5098, 3.5098],
    [3.0813, 3.2252, 3.3125, 3.3702, 3.4102, 3.4387, 3.4591, 3.4737, 3.4840, 3.4910, 3.4954, 3.4978, 3.4985, 3.4985, 3.4985, 3.4985, 3.4985, 3.4985, 3.4985],
    [3.0552, 3.1998, 3.2883, 3.3476, 3.3893, 3.4194, 3.4415, 3.4577, 3.4695, 3.4780, 3.4839, 3.4876, 3.4896, 3.4903, 3.4903, 3.4903, 3.4903, 3.4903, 3.4903],
    [3.0332, 3.1783, 3.2679, 3.3284, 3.3714, 3.4029, 3.4264, 3.4440, 3.4571, 3.4669, 3.4740, 3.4789, 3.4821, 3.4838, 3.4844, 3.4844, 3.4844, 3.4844, 3.4844],
    [3.0143, 3.1598, 3.2502, 3.3118, 3.3560, 3.3887, 3.4133, 3.4321, 3.4464, 3.4572, 3.4654, 3.4713, 3.4755, 3.4782, 3.4797, 3.4802, 3.4802, 3.4802, 3.4802],
    [2.9980, 3.1438, 3.2349, 3.2974, 3.3426, 3.3763, 3.4019, 3.4217, 3.4369, 3.4488, 3.4578, 3.4647, 3.4698, 3.4733, 3.4757, 3.4770, 3.4774, 3.4774, 3.4774],
    [2.9837, 3.1298, 3.2215, 3.2848, 3.3308, 3.3654, 3.3919, 3.4125, 3.4286, 3.4413, 3.4512, 3.4588, 3.4647, 3.4690, 3.4721, 3.4741, 3.4752, 3.4755, 3.4755],
    [2.9712, 3.1174, 3.2097, 3.2736, 3.3203, 3.3557, 3.3829, 3.4043, 3.4212, 3.4346, 3.4453, 3.4536, 3.4602, 3.4652, 3.4689, 3.4715, 3.4732, 3.4742, 3.4744],
    [2.9600, 3.1064, 3.1991, 3.2636, 3.3110, 3.3470, 3.3750, 3.3970, 3.4146, 3.4287, 3.4400, 3.4490, 3.4561, 3.4617, 3.4660, 3.4693, 3.4715, 3.4730, 3.4738],
    [2.9500, 3.0965, 3.1896, 3.2546, 3.3026, 3.3392, 3.3678, 3.3905, 3.4086, 3.4233, 3.4352, 3.4448, 3.4525, 3.4586, 3.4635, 3.4672, 3.4700, 3.4720, 3.4732],
    [2.9410, 3.0876, 3.1811, 3.2466, 3.2950, 3.3322, 3.3613, 3.3845, 3.4033, 3.4185, 3.4309, 3.4410, 3.4492, 3.4558, 3.4612, 3.4654, 3.4686, 3.4710, 3.4727],
    [2.9329, 3.0796, 3.1733, 3.2392, 3.2882, 3.3258, 3.3554, 3.3791, 3.3983, 3.4140, 3.4269, 3.4375, 3.4462, 3.4533, 3.4591, 3.4637, 3.4674, 3.4702, 3.4723],
    [2.9255, 3.0723, 3.1663, 3.2326, 3.2819, 3.3199, 3.3500, 3.3742, 3.3939, 3.4100, 3.4233, 3.4343, 3.4434, 3.4510, 3.4571, 3.4622, 3.4662, 3.4694, 3.4719],
    [2.9188, 3.0656, 3.1599, 3.2265, 3.2762, 3.3146, 3.3451, 3.3697, 3.3898, 3.4063, 3.4200, 3.4314, 3.4409, 3.4488, 3.4554, 3.4608, 3.4652, 3.4687, 3.4715],
    [2.9126, 3.0595, 3.1540, 3.2208, 3.2709, 3.3097, 3.3405, 3.3655, 3.3860, 3.4029, 3.4170, 3.4287, 3.4386, 3.4469, 3.4537, 3.4595, 3.4642, 3.4681, 3.4712],
    [2.9070, 3.0539, 3.1485, 3.2157, 3.2660, 3.3052, 3.3364, 3.3617, 3.3825, 3.3997, 3.4142, 3.4263, 3.4365, 3.4450, 3.4522, 3.4583, 3.4633, 3.4675, 3.4709],
    [2.9017, 3.0487, 3.1435, 3.2109, 3.2615, 3.3010, 3.3325, 3.3581, 3.3792, 3.3968, 3.4116, 3.4240, 3.4345, 3.4433, 3.4509, 3.4572, 3.4625, 3.4670, 3.4707],
    [2.8969, 3.0438, 3.1389, 3.2065, 3.2574, 3.2971, 3.3289, 3.3548, 3.3762, 3.3941, 3.4091, 3.4218, 3.4326, 3.4418, 3.4496, 3.4562, 3.4618, 3.4665, 3.4705],
    [2.8924, 3.0394, 3.1345, 3.2024, 3.2535, 3.2935, 3.3255, 3.3517, 3.3734, 3.3916, 3.4069, 3.4199, 3.4309, 3.4403, 3.4484, 3.4552, 3.4611, 3.4660, 3.4702],
    [2.8882, 3.0352, 3.1305, 3.1985, 3.2499, 3.2901, 3.3224, 3.3489, 3.3708, 3.3892, 3.4048, 3.4180, 3.4293, 3.4390, 3.4472, 3.4543, 3.4604, 3.4656, 3.4700],
    [2.8843, 3.0313, 3.1267, 3.1949, 3.2465, 3.2869, 3.3195, 3.3462, 3.3684, 3.3870, 3.4028, 3.4163, 3.4278, 3.4377, 3.4462, 3.4535, 3.4598, 3.4652, 3.4699],
    [2.8807, 3.0277, 3.1232, 3.1916, 3.2433, 3.2840, 3.3167, 3.3436, 3.3661, 3.3849, 3.4009, 3.4146, 3.4264, 3.4365, 3.4452, 3.4527, 3.4593, 3.4649, 3.4697],
    [2.8772, 3.0243, 3.1199, 3.1884, 3.2404, 3.2812, 3.3142, 3.3413, 3.3639, 3.3830, 3.3992, 3.4131, 3.4250, 3.4354, 3.4443, 3.4520, 3.4587, 3.4645, 3.4695],
    [2.8740, 3.0211, 3.1168, 3.1855, 3.2376, 3.2786, 3.3117, 3.3391, 3.3619, 3.3811, 3.3976, 3.4116, 3.4238, 3.4343, 3.4434, 3.4513, 3.4582, 3.4642, 3.4694],
    [2.8710, 3.0181, 3.1139, 3.1827, 3.2349, 3.2761, 3.3095, 3.3369, 3.3599, 3.3794, 3.3960, 3.4103, 3.4226, 3.4333, 3.4426, 3.4507, 3.4577, 3.4639, 3.4693],
    [2.8682, 3.0152, 3.1111, 3.1800, 3.2325, 3.2738, 3.3073, 3.3350, 3.3581, 3.3778, 3.3946, 3.4090, 3.4215, 3.4323, 3.4418, 3.4501, 3.4573, 3.4636, 3.4691],
    [2.8655, 3.0125, 3.1085, 3.1776, 3.2301, 3.2716, 3.3053, 3.3331, 3.3564, 3.3762, 3.3932, 3.4078, 3.4204, 3.4315, 3.4411, 3.4495, 3.4569, 3.4633, 3.4690],
    [2.8629, 3.0100, 3.1061, 3.1752, 3.2279, 3.2695, 3.3033, 3.3313, 3.3548, 3.3748, 3.3919, 3.4066, 3.4194, 3.4306, 3.4404, 3.4489, 3.4565, 3.4631, 3.4689],
    [2.8605, 3.0076, 3.1037, 3.1730, 3.2258, 3.2675, 3.3015, 3.3296, 3.3533, 3.3734, 3.3906, 3.4055, 3.4185, 3.4298, 3.4397, 3.4484, 3.4561, 3.4628, 3.4688],
    [2.8582, 3.0053, 3.1015, 3.1709, 3.2238, 3.2657, 3.2998, 3.3280, 3.3518, 3.3720, 3.3894, 3.4045, 3.4176, 3.4290, 3.4391, 3.4479, 3.4557, 3.4626, 3.4687],
    [2.8561, 3.0031, 3.0994, 3.1688, 3.2219, 3.2639, 3.2981, 3.3265, 3.3504, 3.3708, 3.3883, 3.4035, 3.4167, 3.4283, 3.4385, 3.4475, 3.4554, 3.4624, 3.4686],
    [2.8540, 3.0011, 3.0974, 3.1669, 3.2200, 3.2622, 3.2965, 3.3250, 3.3491, 3.3696, 3.3872, 3.4025, 3.4159, 3.4276, 3.4379, 3.4470, 3.4551, 3.4622, 3.4685],
    [2.8520, 2.9991, 3.0955, 3.1651, 3.2183, 3.2606, 3.2950, 3.3236, 3.3478, 3.3684, 3.3862, 3.4016, 3.4151, 3.4269, 3.4374, 3.4466, 3.4548, 3.4620, 3.4684],
    [2.8502, 2.9972, 3.0937, 3.1633, 3.2167, 3.2590, 3.2936, 3.3223, 3.3466, 3.3673, 3.3852, 3.4008, 3.4144, 3.4263, 3.4368, 3.4462, 3.4545, 3.4618, 3.4684],
    [2.8484, 2.9954, 3.0919, 3.1617, 3.2151, 3.2575, 3.2922, 3.3211, 3.3454, 3.3663, 3.3843, 3.3999, 3.4136, 3.4257, 3.4364, 3.4458, 3.4542, 3.4616, 3.4683],
    [2.8467, 2.9937, 3.0903, 3.1601, 3.2136, 3.2561, 3.2909, 3.3198, 3.3443, 3.3653, 3.3834, 3.3992, 3.4130, 3.4251, 3.4359, 3.4454, 3.4539, 3.4615, 3.4682],
    [2.8450, 2.9921, 3.0887, 3.1586, 3.2121, 3.2548, 3.2896, 3.3187, 3.3433, 3.3643, 3.3825, 3.3984, 3.4123, 3.4246, 3.4354, 3.4451, 3.4536, 3.4613, 3.4682],
    [2.8435, 2.9905, 3.0871, 3.1571, 3.2108, 3.2535, 3.2884, 3.3176, 3.3423, 3.3634, 3.3817, 3.3977, 3.4117, 3.4240, 3.4350, 3.4447, 3.4534, 3.4612, 3.4681],
    [2.8420, 2.9890, 3.0857, 3.1557, 3.2094, 3.2522, 3.2873, 3.3165, 3.3413, 3.3625, 3.3809, 3.3970, 3.4111, 3.4235, 3.4346, 3.4444, 3.4532, 3.4610, 3.4680],
    [2.8405, 2.9876, 3.0843, 3.1544, 3.2082, 3.2511, 3.2862, 3.3155, 3.3403, 3.3617, 3.3802, 3.3963, 3.4105, 3.4230, 3.4342, 3.4441, 3.4529, 3.4609, 3.4680],
    [2.8392, 2.9862, 3.0829, 3.1531, 3.2069, 3.2499, 3.2851, 3.3145, 3.3394, 3.3609, 3.3794, 3.3957, 3.4099, 3.4226, 3.4338, 3.4438, 3.4527, 3.4607, 3.4679],
    [2.8378, 2.9849, 3.0816, 3.1518, 3.2058, 3.2488, 3.2841, 3.3136, 3.3386, 3.3601, 3.3787, 3.3950, 3.4094, 3.4221, 3.4334, 3.4435, 3.4525, 3.4606, 3.4679],
    [2.8366, 2.9836, 3.0804, 3.1507, 3.2046, 3.2477, 3.2831, 3.3126, 3.3377, 3.3593, 3.3781, 3.3944, 3.4089, 3.4217, 3.4330, 3.4432, 3.4523, 3.4605, 3.4678],
    [2.8353, 2.9824, 3.0792, 3.1495, 3.2036, 3.2467, 3.2821, 3.3118, 3.3369, 3.3586, 3.3774, 3.3939, 3.4084, 3.4212, 3.4327, 3.4429, 3.4521, 3.4603, 3.4678],
    [2.8341, 2.9812, 3.0780, 3.1484, 3.2025, 3.2457, 3.2812, 3.3109, 3.3362, 3.3579, 3.3768, 3.3933, 3.4079, 3.4208, 3.4324, 3.4427, 3.4519, 3.4602, 3.4677],
    [2.8330, 2.9800, 3.0769, 3.1473, 3.2015, 3.2448, 3.2803, 3.3101, 3.3354, 3.3572, 3.3762, 3.3928, 3.4074, 3.4205, 3.4320, 3.4424, 3.4517, 3.4601, 3.4677],
    [2.8319, 2.9789, 3.0759, 3.1463, 3.2005, 3.2439, 3.2795, 3.3093, 3.3347, 3.3566, 3.3756, 3.3923, 3.4070, 3.4201, 3.4317, 3.4422, 3.4516, 3.4600, 3.4676],
    [2.8309, 2.9779, 3.0748, 3.1453, 3.1996, 3.2430, 3.2787, 3.3086, 3.3340, 3.3559, 3.3750, 3.3918, 3.4066, 3.4197, 3.4314, 3.4419, 3.4514, 3.4599, 3.4676],
    [2.8298, 2.9769, 3.0738, 3.1444, 3.1987, 3.2421, 3.2779, 3.3078, 3.3333, 3.3553, 3.3745, 3.3913, 3.4062, 3.4194, 3.4311, 3.4417, 3.4512, 3.4598, 3.4676],
    [2.8288, 2.9759, 3.0729, 3.1434, 3.1978, 3.2413, 3.2771, 3.3071, 3.3327, 3.3547, 3.3740, 3.3908, 3.4057, 3.4190, 3.4309, 3.4415, 3.4511, 3.4597, 3.4675],
    [2.8279, 2.9749, 3.0719, 3.1425, 3.1970, 3.2405, 3.2764, 3.3064, 3.3321, 3.3542, 3.3734, 3.3904, 3.4054, 3.4187, 3.4306, 3.4413, 3.4509, 3.4596, 3.4675],
    [2.8270, 2.9740, 3.0710, 3.1417, 3.1961, 3.2398, 3.2756, 3.3058, 3.3315, 3.3536, 3.3730, 3.3899, 3.4050, 3.4184, 3.4303, 3.4411, 3.4508, 3.4595, 3.4675],
    [2.8261, 2.9731, 3.0702, 3.1408, 3.1953, 3.2390, 3.2749, 3.3051, 3.3309, 3.3531, 3.3725, 3.3895, 3.4046, 3.4181, 3.4301, 3.4409, 3.4506, 3.4594, 3.4674],
    [2.8252, 2.9722, 3.0693, 3.1400, 3.1946, 3.2383, 3.2743, 3.3045, 3.3303, 3.3526, 3.3720, 3.3891, 3.4043, 3.4178, 3.4298, 3.4407, 3.4505, 3.4593, 3.4674],
    [2.8244, 2.9714, 3.0685, 3.1392, 3.1938, 3.2376, 3.2736, 3.3039, 3.3297, 3.3521, 3.3716, 3.3887, 3.4039, 3.4175, 3.4296, 3.4405, 3.4503, 3.4593, 3.4674],
    [2.8236, 2.9706, 3.0677, 3.1385, 3.1931, 3.2369, 3.2730, 3.3033, 3.3292, 3.3516, 3.3711, 3.3883, 3.4036, 3.4172, 3.4294, 3.4403, 3.4502, 3.4592, 3.4673],
    [2.8228, 2.9698, 3.0669, 3.1377, 3.1924, 3.2362, 3.2724, 3.3027, 3.3287, 3.3511, 3.3707, 3.3880, 3.4033, 3.4169, 3.4291, 3.4401, 3.4501, 3.4591, 3.4673],
    [2.8220, 2.9690, 3.0662, 3.1370, 3.1917, 3.2356, 3.2718, 3.3022, 3.3282, 3.3507, 3.3703, 3.3876, 3.4029, 3.4166, 3.4289, 3.4400, 3.4500, 3.4590, 3.4673],
    [2.8213, 2.9683, 3.0655, 3.1363, 3.1911, 3.2350, 3.2712, 3.3017, 3.3277, 3.3502, 3.3699, 3.3872, 3.4026, 3.4164, 3.4287, 3.4398, 3.4498, 3.4590, 3.4672],
    [2.8206, 2.9676, 3.0648, 3.1356, 3.1904, 3.2344, 3.2706, 3.3011, 3.3272, 3.3498, 3.3695, 3.3869, 3.4023, 3.4161, 3.4285, 3.4396, 3.4497, 3.4589, 3.4672],
    [2.8199, 2.9669, 3.0641, 3.1350, 3.1898, 3.2338, 3.2701, 3.3006, 3.3267, 3.3494, 3.3691, 3.3866, 3.4021, 3.4159, 3.4283, 3.4395, 3.4496, 3.4588, 3.4672],
    [2.8192, 2.9662, 3.0634, 3.1343, 3.1892, 3.2332, 3.2695, 3.3001, 3.3263, 3.3490, 3.3688, 3.3862, 3.4018, 3.4156, 3.4281, 3.4393, 3.4495, 3.4587, 3.4672],
    [2.8185, 2.9655, 3.0628, 3.1337, 3.1886, 3.2327, 3.2690, 3.2997, 3.3259, 3.3486, 3.3684, 3.3859, 3.4015, 3.4154, 3.4279, 3.4392, 3.4494, 3.4587, 3.4671],
    [2.8179, 2.9649, 3.0621, 3.1331, 3.1880, 3.2321, 3.2685, 3.2992, 3.3254, 3.3482, 3.3681, 3.3856, 3.4012, 3.4152, 3.4277, 3.4390, 3.4493, 3.4586, 3.4671],
    [2.8173, 2.9642, 3.0615, 3.1325, 3.1875, 3.2316, 3.2680, 3.2987, 3.3250, 3.3478, 3.3677, 3.3853, 3.4010, 3.4150, 3.4276, 3.4389, 3.4492, 3.4586, 3.4671],
    [2.8167, 2.9636, 3.0609, 3.1320, 3.1869, 3.2311, 3.2676, 3.2983, 3.3246, 3.3474, 3.3674, 3.3850, 3.4007, 3.4148, 3.4274, 3.4388, 3.4491, 3.4585, 3.4671],
    [2.8161, 2.9630, 3.0603, 3.1314, 3.1864, 3.2306, 3.2671, 3.2979, 3.3242, 3.3471, 3.3671, 3.3848, 3.4005, 3.4145, 3.4272, 3.4386, 3.4490, 3.4584, 3.4670],
    [2.8155, 2.9625, 3.0598, 3.1309, 3.1859, 3.2301, 3.2666, 3.2974, 3.3238, 3.3467, 3.3668, 3.3845, 3.4002, 3.4143, 3.4270, 3.4385, 3.4489, 3.4584, 3.4670],
    [2.8149, 2.9619, 3.0592, 3.1303, 3.1854, 3.2296, 3.2662, 3.2970, 3.3235, 3.3464, 3.3665, 3.3842, 3.4000, 3.4141, 3.4269, 3.4384, 3.4488, 3.4583, 3.4670],
    [2.8144, 2.9613, 3.0587, 3.1298, 3.1849, 3.2292, 3.2658, 3.2966, 3.3231, 3.3460, 3.3662, 3.3839, 3.3998, 3.4140, 3.4267, 3.4383, 3.4487, 3.4583, 3.4670],
    [2.8138, 2.9608, 3.0582, 3.1293, 3.1844, 3.2287, 3.2654, 3.2963, 3.3227, 3.3457, 3.3659, 3.3837, 3.3996, 3.4138, 3.4266, 3.4381, 3.4486, 3.4582, 3.4670],
    [2.8133, 2.9603, 3.0576, 3.1288, 3.1839, 3.2283, 3.2649, 3.2959, 3.3224, 3.3454, 3.3656, 3.3834, 3.3993, 3.4136, 3.4264, 3.4380, 3.4486, 3.4582, 3.4669],
    [2.8128, 2.9598, 3.0572, 3.1283, 3.1835, 3.2278, 3.2645, 3.2955, 3.3221, 3.3451, 3.3653, 3.3832, 3.3991, 3.4134, 3.4263, 3.4379, 3.4485, 3.4581, 3.4669],
    [2.8123, 2.9593, 3.0567, 3.1279, 3.1830, 3.2274, 3.2642, 3.2951, 3.3217, 3.3448, 3.3650, 3.3830, 3.3989, 3.4132, 3.4261, 3.4378, 3.4484, 3.4581, 3.4669],
    [2.8118, 2.9588, 3.0562, 3.1274, 3.1826, 3.2270, 3.2638, 3.2948, 3.3214, 3.3445, 3.3648, 3.3827, 3.3987, 3.4131, 3.4260, 3.4377, 3.4483, 3.4580, 3.4669],
    [2.8114, 2.9583, 3.0557, 3.1270, 3.1822, 3.2266, 3.2634, 3.2944, 3.3211, 3.3442, 3.3645, 3.3825, 3.3985, 3.4129, 3.4258, 3.4376, 3.4482, 3.4580, 3.4669],
    [2.8109, 2.9578, 3.0553, 3.1265, 3.1818, 3.2262, 3.2630, 3.2941, 3.3208, 3.3439, 3.3643, 3.3823, 3.3983, 3.4127, 3.4257, 3.4375, 3.4482, 3.4579, 3.4669],
    [2.8105, 2.9574, 3.0548, 3.1261, 3.1814, 3.2259, 3.2627, 3.2938, 3.3205, 3.3437, 3.3640, 3.3821, 3.3981, 3.4126, 3.4256, 3.4374, 3.4481, 3.4579, 3.4668],
    [2.8100, 2.9569, 3.0544, 3.1257, 3.1810, 3.2255, 3.2623, 3.2935, 3.3202, 3.3434, 3.3638, 3.3819, 3.3980, 3.4124, 3.4255, 3.4373, 3.4480, 3.4578, 3.4668],
    [2.8096, 2.9565, 3.0540, 3.1253, 3.1806, 3.2251, 3.2620, 3.2931, 3.3199, 3.3431, 3.3636, 3.3816, 3.3978, 3.4123, 3.4253, 3.4372, 3.4480, 3.4578, 3.4668],
    [2.8092, 2.9561, 3.0536, 3.1249, 3.1802, 3.2248, 3.2617, 3.2928, 3.3196, 3.3429, 3.3633, 3.3814, 3.3976, 3.4121, 3.4252, 3.4371, 3.4479, 3.4578, 3.4668],
    [2.8088, 2.9557, 3.0532, 3.1245, 3.1798, 3.2244, 3.2613, 3.2925, 3.3193, 3.3426, 3.3631, 3.3812, 3.3974, 3.4120, 3.4251, 3.4370, 3.4478, 3.4577, 3.4668],
    [2.8083, 2.9553, 3.0528, 3.1241, 3.1795, 3.2241, 3.2610, 3.2922, 3.3191, 3.3424, 3.3629, 3.3810, 3.3973, 3.4118, 3.4250, 3.4369, 3.4478, 3.4577, 3.4668],
    [2.8080, 2.9549, 3.0524, 3.1237, 3.1791, 3.2237, 3.2607, 3.2920, 3.3188, 3.3421, 3.3627, 3.3809, 3.3971, 3.4117, 3.4249, 3.4368, 3.4477, 3.4576, 3.4668],
    [2.8076, 2.9545, 3.0520, 3.1234, 3.1788, 3.2234, 3.2604, 3.2917, 3.3185, 3.3419, 3.3625, 3.3807, 3.3969, 3.4115, 3.4247, 3.4367, 3.4476, 3.4576, 3.4667],
    [2.8072, 2.9541, 3.0516, 3.1230, 3.1784, 3.2231, 3.2601, 3.2914, 3.3183, 3.3417, 3.3623, 3.3805, 3.3968, 3.4114, 3.4246, 3.4366, 3.4476, 3.4576, 3.4667],
    [2.8068, 2.9537, 3.0513, 3.1227, 3.1781, 3.2228, 3.2598, 3.2911, 3.3180, 3.3415, 3.3621, 3.3803, 3.3966, 3.4113, 3.4245, 3.4366, 3.4475, 3.4575, 3.4667],
    [2.8065, 2.9534, 3.0509, 3.1223, 3.1778, 3.2225, 3.2595, 3.2909, 3.3178, 3.3412, 3.3619, 3.3801, 3.3965, 3.4112, 3.4244, 3.4365, 3.4474, 3.4575, 3.4667],
    [2.8061, 2.9530, 3.0506, 3.1220, 3.1775, 3.2222, 3.2592, 3.2906, 3.3176, 3.3410, 3.3617, 3.3800, 3.3963, 3.4110, 3.4243, 3.4364, 3.4474, 3.4575, 3.4667],
    [2.8058, 2.9527, 3.0502, 3.1217, 3.1771, 3.2219, 3.2590, 3.2904, 3.3173, 3.3408, 3.3615, 3.3798, 3.3962, 3.4109, 3.4242, 3.4363, 3.4473, 3.4574, 3.4667],
    [2.8054, 2.9523, 3.0499, 3.1213, 3.1768, 3.2216, 3.2587, 3.2901, 3.3171, 3.3406, 3.3613, 3.3796, 3.3960, 3.4108, 3.4241, 3.4362, 3.4473, 3.4574, 3.4667],
    [2.8051, 2.9520, 3.0496, 3.1210, 3.1765, 3.2213, 3.2584, 3.2899, 3.3169, 3.3404, 3.3611, 3.3795, 3.3959, 3.4107, 3.4240, 3.4362, 3.4472, 3.4574, 3.4667],
    [2.8048, 2.9517, 3.0492, 3.1207, 3.1762, 3.2210, 3.2582, 3.2896, 3.3167, 3.3402, 3.3609, 3.3793, 3.3958, 3.4105, 3.4239, 3.4361, 3.4472, 3.4573, 3.4666],
    [2.8044, 2.9513, 3.0489, 3.1204, 3.1760, 3.2208, 3.2579, 3.2894, 3.3164, 3.3400, 3.3607, 3.3792, 3.3956, 3.4104, 3.4238, 3.4360, 3.4471, 3.4573, 3.4666],
    [2.8041, 2.9510, 3.0486, 3.1201, 3.1757, 3.2205, 3.2577, 3.2892, 3.3162, 3.3398, 3.3606, 3.3790, 3.3955, 3.4103, 3.4237, 3.4359, 3.4471, 3.4573, 3.4666],
    [2.8038, 2.9507, 3.0483, 3.1198, 3.1754, 3.2202, 3.2574, 3.2889, 3.3160, 3.3396, 3.3604, 3.3789, 3.3954, 3.4102, 3.4237, 3.4359, 3.4470, 3.4572, 3.4666],
    [2.8035, 2.9504, 3.0480, 3.1195, 3.1751, 3.2200, 3.2572, 3.2887, 3.3158, 3.3394, 3.3602, 3.3787, 3.3952, 3.4101, 3.4236, 3.4358, 3.4470, 3.4572, 3.4666],
    [2.8032, 2.9501, 3.0477, 3.1193, 3.1748, 3.2197, 3.2570, 3.2885, 3.3156, 3.3393, 3.3601, 3.3786, 3.3951, 3.4100, 3.4235, 3.4357, 3.4469, 3.4572, 3.4666],
    [2.8029, 2.9498, 3.0474, 3.1190, 3.1746, 3.2195, 3.2567, 3.2883, 3.3154, 3.3391, 3.3599, 3.3784, 3.3950, 3.4099, 3.4234, 3.4357, 3.4469, 3.4571, 3.4666],
    [2.8026, 2.9495, 3.0471, 3.1187, 3.1743, 3.2192, 3.2565, 3.2881, 3.3152, 3.3389, 3.3598, 3.3783, 3.3949, 3.4098, 3.4233, 3.4356, 3.4468, 3.4571, 3.4666],
    [2.8024, 2.9492, 3.0469, 3.1184, 3.1741, 3.2190, 3.2563, 3.2879, 3.3150, 3.3387, 3.3596, 3.3781, 3.3947, 3.4097, 3.4232, 3.4355, 3.4468, 3.4571, 3.4666],
    [2.8021, 2.9490, 3.0466, 3.1182, 3.1738, 3.2188, 3.2561, 3.2877, 3.3148, 3.3386, 3.3595, 3.3780, 3.3946, 3.4096, 3.4231, 3.4355, 3.4467, 3.4571, 3.4666],
    [2.8018, 2.9487, 3.0463, 3.1179, 3.1736, 3.2185, 3.2558, 3.2875, 3.3147, 3.3384, 3.3593, 3.3779, 3.3945, 3.4095, 3.4231, 3.4354, 3.4467, 3.4570, 3.4665],
    [2.8015, 2.9484, 3.0461, 3.1177, 3.1733, 3.2183, 3.2556, 3.2873, 3.3145, 3.3382, 3.3592, 3.3778, 3.3944, 3.4094, 3.4230, 3.4353, 3.4466, 3.4570, 3.4665],
    [2.8013, 2.9482, 3.0458, 3.1174, 3.1731, 3.2181, 3.2554, 3.2871, 3.3143, 3.3381, 3.3590, 3.3776, 3.3943, 3.4093, 3.4229, 3.4353, 3.4466, 3.4570, 3.4665],
    [2.8010, 2.9479, 3.0456, 3.1172, 3.1729, 3.2179, 3.2552, 3.2869, 3.3141, 3.3379, 3.3589, 3.3775, 3.3942, 3.4092, 3.4228, 3.4352, 3.4466, 3.4570, 3.4665],
    [2.8008, 2.9477, 3.0453, 3.1169, 3.1726, 3.2176, 3.2550, 3.2867, 3.3140, 3.3378, 3.3587, 3.3774, 3.3941, 3.4091, 3.4228, 3.4352, 3.4465, 3.4569, 3.4665],
    [2.8005, 2.9474, 3.0451, 3.1167, 3.1724, 3.2174, 3.2548, 3.2865, 3.3138, 3.3376, 3.3586, 3.3773, 3.3940, 3.4090, 3.4227, 3.4351, 3.4465, 3.4569, 3.4665],
    [2.8003, 2.9472, 3.0448, 3.1165, 3.1722, 3.2172, 3.2546, 3.2863, 3.3136, 3.3375, 3.3585, 3.3771, 3.3939, 3.4089, 3.4226, 3.4351, 3.4464, 3.4569, 3.4665],
    [2.8000, 2.9469, 3.0446, 3.1163, 3.1720, 3.2170, 3.2544, 3.2862, 3.3135, 3.3373, 3.3583, 3.3770, 3.3938, 3.4089, 3.4225, 3.4350, 3.4464, 3.4569, 3.4665],
    [2.7718, 2.9184, 3.0167, 3.0893, 3.1463, 3.1928, 3.2317, 3.2651, 3.2941, 3.3197, 3.3425, 3.3630, 3.3816, 3.3985, 3.4141, 3.4284, 3.4417, 3.4540, 3.4655],
];
