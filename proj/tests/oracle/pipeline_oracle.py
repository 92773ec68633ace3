"""Independent sympy evaluation of the invariant formulas.

Used to derive the frozen expected values in the C++ tests. Not part of the
build; run with `python3 tests/oracle/pipeline_oracle.py`.
"""
import sympy as sp

x, y = sp.symbols('x y')
a, b, c, d = sp.symbols('a b c d')


def D(f, i, j):
    return sp.diff(f, x, i, y, j) if (i or j) else f


def simp(e):
    return sp.cancel(sp.together(e))


def pipeline(P, Q, R, S, branch='A', gamma_fix=True):
    A = simp(D(P, 0, 2) - 2*D(Q, 1, 1) + D(R, 2, 0) + 2*P*D(S, 1, 0) + S*D(P, 1, 0)
             - 3*P*D(R, 0, 1) - 3*R*D(P, 0, 1) - 3*Q*D(R, 1, 0) + 6*Q*D(Q, 0, 1))
    B = simp(D(S, 2, 0) - 2*D(R, 1, 1) + D(Q, 0, 2) - 2*S*D(P, 0, 1) - P*D(S, 0, 1)
             + 3*S*D(Q, 1, 0) + 3*Q*D(S, 1, 0) + 3*R*D(Q, 0, 1) - 6*R*D(R, 1, 0))
    Ax, Ay, Bx, By = [simp(D(A, 1, 0)), simp(D(A, 0, 1)), simp(D(B, 1, 0)), simp(D(B, 0, 1))]
    G = simp(-B*Bx - 3*A*By + 4*B*Ay + 3*S*A**2 - 6*R*B*A + 3*Q*B**2)
    H = simp(-A*Ay - 3*B*Ax + 4*A*Bx - 3*P*B**2 + 6*Q*A*B - 3*R*A**2)
    out = dict(A=A, B=B, G=G, H=H, F5=simp((A*G + B*H)/3))
    if branch == 'A':
        N = simp(-H/(3*A))
    else:
        N = simp(G/(3*B))
    Nx, Ny = simp(D(N, 1, 0)), simp(D(N, 0, 1))
    if branch == 'A':
        M = (-sp.Rational(12, 5)*B*N*(B*P + Ax)/A + B*Nx + sp.Rational(24, 5)*B*N*Q
             + sp.Rational(6, 5)*N*Bx + sp.Rational(6, 5)*N*Ay - A*Ny - sp.Rational(12, 5)*A*N*R)
        Om = (2*B*Ax*(B*P + Ax)/A**3 - (2*Bx + 3*B*Q)*Ax/A**2 + (Ay - 2*Bx)*B*P/A**2
              - (B*D(A, 2, 0) + B**2*D(P, 1, 0))/A**2 + D(B, 2, 0)/A
              + (3*Bx*Q + 3*B*D(Q, 1, 0) - By*P - B*D(P, 0, 1))/A + D(Q, 0, 1) - 2*D(R, 1, 0))
        w1 = (sp.Rational(12, 5)*P*R/A - sp.Rational(54, 25)*Q**2/A - D(P, 0, 1)/A
              + 6*D(Q, 1, 0)/(5*A) - (P*Ay + B*D(P, 1, 0) + D(A, 2, 0))/(5*A**2) - 2*Bx*P/(5*A**2)
              + (3*Q*Ax - 12*P*B*Q)/(25*A**2) + (6*B**2*P**2 + 12*B*P*Ax + 6*Ax**2)/(25*A**3))
        w2 = ((-5*B*D(P, 0, 1) + 6*B*D(Q, 0, 1) + 12*R*B*P)/(5*A**2) - sp.Rational(54, 25)*B*Q**2/A**2
              - (2*B*Bx*P + B*Ay*P + B**2*D(P, 1, 0) + B*D(A, 2, 0))/(5*A**3)
              - 12*B**2*P*Q/(25*A**3) + 3*B*Q*Ax/(25*A**3)
              + (6*B*Ax**2 + 6*B**3*P**2 + 12*B**2*Ax*P)/(25*A**4))
        Theta = w1/A
        phi1 = -3*(B*P + Ax)/(5*A) + sp.Rational(3, 5)*Q
        phi2 = 3*B*(B*P + Ax)/(5*A**2) - 3*(Bx + Ay + 3*B*Q)/(5*A) + sp.Rational(6, 5)*R
    else:
        M = (-sp.Rational(12, 5)*A*N*(A*S - By)/B - A*Ny + sp.Rational(24, 5)*A*N*R
             - sp.Rational(6, 5)*N*Ay - sp.Rational(6, 5)*N*Bx + B*Nx - sp.Rational(12, 5)*B*N*Q)
        Om = (2*A*By*(A*S - By)/B**3 - (2*Ay - 3*A*R)*By/B**2 + (Bx - 2*Ay)*A*S/B**2
              + (A*D(B, 0, 2) - A**2*D(S, 0, 1))/B**2 - D(A, 0, 2)/B
              + (3*Ay*R + 3*A*D(R, 0, 1) - Ax*S - A*D(S, 1, 0))/B + D(R, 1, 0) - 2*D(Q, 0, 1))
        w1 = ((5*A*D(S, 1, 0) - 6*A*D(R, 0, 1) + 12*Q*A*S)/(5*B**2) - sp.Rational(54, 25)*A*R**2/B**2
              + (2*A*Ay*S + A*Bx*S + A**2*D(S, 0, 1) - A*D(B, 0, 2))/(5*B**3)
              - 12*A**2*S*R/(25*B**3) + 3*A*R*By/(25*B**3)
              + (6*A*By**2 + 6*A**3*S**2 - 12*A**2*By*S)/(25*B**4))
        w2 = (sp.Rational(12, 5)*S*Q/B - sp.Rational(54, 25)*R**2/B + D(S, 1, 0)/B
              - 6*D(R, 0, 1)/(5*B) + (S*Bx + A*D(S, 0, 1) - D(B, 0, 2))/(5*B**2) + 2*Ay*S/(5*B**2)
              - (3*R*By + 12*S*A*R)/(25*B**2) + (6*A**2*S**2 - 12*By*A*S + 6*By**2)/(25*B**3))
        Theta = w2/B
        phi1 = -3*A*(A*S - By)/(5*B**2) - 3*(Ay + Bx - 3*A*R)/(5*B) - sp.Rational(6, 5)*Q
        phi2 = 3*(A*S - By)/(5*B) - sp.Rational(3, 5)*R
    M, Om, w1, w2, Theta, phi1, phi2 = map(simp, (M, Om, w1, w2, Theta, phi1, phi2))
    th1 = simp(D(Theta, 0, 1) - 2*phi2*Theta)
    th2 = simp(-D(Theta, 1, 0) + 2*phi1*Theta)
    L = simp(th1*th2*(D(th1, 1, 0) - D(th2, 0, 1)) + th2**2*D(th1, 0, 1) - th1**2*D(th2, 1, 0)
             - P*th1**3 - 3*Q*th1**2*th2 - 3*R*th1*th2**2 - S*th2**3 - Theta**2/2)
    L1 = simp(D(L, 1, 0)*th1 + D(L, 0, 1)*th2 - 4*L*(phi1*th1 + phi2*th2))
    W = simp(D(L1, 1, 0)*th1 + D(L1, 0, 1)*th2 - 5*L1*(phi1*th1 + phi2*th2))
    V = simp(D(L1, 1, 0)*B - D(L1, 0, 1)*A - 5*L1*(B*phi1 - A*phi2))
    if branch == 'A':
        g1 = (-6*B*N*(B*P + Ax)/(5*A**2) + 18*N*B*Q/(5*A) + 6*N*(Bx + Ay)/(5*A) - Ny
              - sp.Rational(12, 5)*N*R - 2*Om*B)
        g2 = -6*N*(B*P + Ax)/(5*A) + Nx + sp.Rational(6, 5)*N*Q + 2*Om*A
    else:
        inner = (A*S - By) if gamma_fix else (A*N - By)
        g1 = -6*N*inner/(5*B) - Ny + sp.Rational(6, 5)*N*R - 2*Om*B
        g2 = (-6*A*N*(A*S - By)/(5*B**2) + 18*N*A*R/(5*B) - 6*N*(Ay + Bx)/(5*B) + Nx
              - sp.Rational(12, 5)*N*Q + 2*Om*A)
    g1, g2 = simp(g1), simp(g2)
    xi1, xi2 = simp(-2*Om*B - g1), simp(2*Om*A - g2)
    out.update(N=N, M=M, Omega=Om, w1=w1, w2=w2, Theta=Theta, phi1=phi1, phi2=phi2,
               th1=th1, th2=th2, L=L, L1=L1, W=W, V=V, g1=g1, g2=g2, xi1=xi1, xi2=xi2)
    if M != 0:
        Gam = simp((g1*g2*(D(g1, 1, 0) - D(g2, 0, 1)) + g2**2*D(g1, 0, 1) - g1**2*D(g2, 1, 0)
                    + P*g1**3 + 3*Q*g1**2*g2 + 3*R*g1*g2**2 + S*g2**3)/M)
        out['Gamma'] = Gam
        if N != 0:
            I1 = simp(M/N**2)
            I3 = simp(Gam/M)
            I6 = simp((B*D(I3, 1, 0) - A*D(I3, 0, 1))/N)
            I9 = simp((xi1*D(I3, 1, 0) + xi2*D(I3, 0, 1))**2/N**3)
            out.update(I1=I1, I3=I3, I6=I6, I9=I9)
            out['J2'] = simp((4 + 10*I6 - 60*I3)**2/(2500*I9))
    if L != 0:
        out['PI_I1'] = simp(L1**4/L**5)
        out['PI_I2'] = simp(Theta**2/L)
    return out


def show(name, P, Q, R, S, keys, branch='A'):
    o = pipeline(P, Q, R, S, branch)
    print('==', name, 'branch', branch)
    for k in keys:
        if k in o:
            print('  ', k, '=', sp.factor(o[k]))


if __name__ == '__main__':
    allk = ['A', 'B', 'G', 'H', 'N', 'M', 'Omega', 'Theta', 'phi1', 'phi2', 'th1', 'th2', 'L', 'L1',
            'W', 'V', 'xi1', 'xi2', 'Gamma', 'I1', 'I3', 'I6', 'I9', 'J2', 'PI_I1', 'PI_I2']
    show('PI', 6*y**2 + x, 0, 0, 0, allk)
    show('PII', 2*y**3 + x*y + a, 0, 0, 0, allk)
    show('PIII0', b/x, -1/(3*x), 1/(3*y), 0, allk)
    show('Kamke69', -a*y**3 - b*x*y - c*y - d, 0, 0, 0, allk)
    show('y=6y^2', 6*y**2, 0, 0, 0, ['A', 'N', 'Theta', 'L', 'L1'])
    show('y=x', x, 0, 0, 0, ['A', 'Theta', 'L'])
