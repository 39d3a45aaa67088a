import mpmath as mp
mp.mp.dps = 60
def qp(a,q,n=None):
    if n is None:
        r=mp.mpf(1); i=0
        qi=mp.mpf(1)
        while True:
            t=a*qi
            r*= (1-t)
            if abs(t)<mp.mpf(10)**(-mp.mp.dps-5): break
            qi*=q
        return r
    if n>=0:
        r=mp.mpf(1)
        for i in range(n): r*=(1-a*q**i)
        return r
    # negative n: (a;q)_{-n} = 1/(a q^{-n};q)_n
    m=-n
    r=mp.mpf(1)
    for i in range(1,m+1): r*=(1-a*q**(-i))
    return 1/r
def qps(lst,q,n=None):
    r=mp.mpf(1)
    for a in lst: r*=qp(a,q,n)
    return r
def theta(x,q): return qp(x,q)*qp(q/x,q)
def phi(up,lo,q,z,terms=None):
    s=0; t=mp.mpf(1); k=0; mx=0
    while True:
        s+=t; mx=max(mx,abs(t))
        num=1; den=1
        for a in up: num*=(1-a*q**k)
        for b in lo: den*=(1-b*q**k)
        den*=(1-q**(k+1))
        t=t*num/den*z; k+=1
        if t==0 or (k>10 and abs(t)<abs(s)*mp.mpf(10)**(-mp.mp.dps)) : break
        if k>5000: raise Exception("nc")
    return s
def w87(a,b,c,d,e,f,q,z):
    s=0; t=mp.mpf(1); k=0
    while True:
        s+=t*(1-a*q**(2*k))/(1-a)
        num=1;den=1
        for p in (a,b,c,d,e,f): num*=(1-p*q**k)
        den=(1-q**(k+1))
        for p in (b,c,d,e,f): den*=(1-q*a/p*q**k)
        t=t*num/den*z; k+=1
        if k>10 and abs(t)<(abs(s)+1e-300)*mp.mpf(10)**(-mp.mp.dps): break
        if k>5000: raise Exception("nc")
    return s
class P:
    def __init__(s,q,a,b,c,d,t):
        s.q,s.a,s.b,s.c,s.d,s.t=[mp.mpf(v) for v in (q,a,b,c,d,t)]
    def dual(s):
        q,a,b,c,d,t=s.q,s.a,s.b,s.c,s.d,s.t
        at=mp.sqrt(a*b*c*d/q)
        return P(q,at,a*b/at,a*c/at,a*d/at,1/(q*a*d*t))
def aw_phi(g,x,p):
    q,a,b,c,d=p.q,p.a,p.b,p.c,p.d
    D=p.dual(); at,bt,ct,dt=D.a,D.b,D.c,D.d
    if abs(q/(dt*g))>=1: g=1/g
    pre=qps([q*a*x*g/dt,q*a*g/(dt*x)],q)/qps([at*bt*ct*g,q*g/dt,q*at/dt,q*x/d,q/(d*x)],q)
    return pre*w87(at*bt*ct*g/q,a*x,a/x,at*g,bt*g,ct*g,q,q/(dt*g))
def aw_43(g,x,p):
    q,a,b,c,d=p.q,p.a,p.b,p.c,p.d
    D=p.dual(); at,bt,ct,dt=D.a,D.b,D.c,D.d
    t1=phi([a*x,a/x,at*g,at/g],[a*b,a*c,a*d],q,q)/qps([b*c,q*a/d,q/(a*d)],q)
    pre=qps([a*x,a/x,at*g,at/g,q*b/d,q*c/d],q)/qps([q*x/d,q/(d*x),q*g/dt,q/(dt*g),a*b,a*c,b*c,q*a/d,a*d/q],q)
    t2=pre*phi([q*x/d,q/(d*x),q*g/dt,q/(dt*g)],[q*b/d,q*c/d,q*q/(a*d)],q,q)
    return t1+t2
def pn(n,x,p):
    q,a,b,c,d=p.q,p.a,p.b,p.c,p.d
    return phi([q**(-n),q**(n-1)*a*b*c*d,a*x,a/x],[a*b,a*c,a*d],q,q)
def alpha(x,p):
    q,a,b,c,d=p.q,p.a,p.b,p.c,p.d
    return (1-a*x)*(1-b*x)*(1-c*x)*(1-d*x)/((1-x*x)*(1-q*x*x))
def L(f,x,p):
    q=p.q
    return alpha(x,p)*(f(q*x)-f(x))+alpha(1/x,p)*(f(x/q)-f(x))
def mu(g,p):
    at=p.dual().a
    return -1-at**2+at*(g+1/g)
def Phi(g,x,p):
    q,a,b,c,d,t=p.q,p.a,p.b,p.c,p.d,p.t
    D=p.dual(); at,bt,ct,dt=D.a,D.b,D.c,D.d
    k=mp.log(x/(d*t))/mp.log(q)
    kk=int(mp.nint(k.real))
    free=(at*g)**(-kk)
    pre=qps([q*a*g/(at*x),q*b*g/(at*x),q*c*g/(at*x),q*at*g/(d*x),d/x],q)/qps([q/(a*x),q/(b*x),q/(c*x),q/(d*x),q*q*g*g/(d*x)],q)
    return pre*w87(q*g*g/(d*x),q*g/at,q*g/dt,bt*g,ct*g,q/(d*x),q,d/x)*free
def cfun(g,p):
    q,a,b,c,d,t=p.q,p.a,p.b,p.c,p.d,p.t
    return qps([a/g,b/g,c/g],q)*theta(g/(d*t),q)/(qps([a*b,a*c,b*c,q*a/d],q)*theta(q*a*d*t,q)*qps([q*g/d,1/g**2],q))
def Delta(x,p):
    q,a,b,c,d=p.q,p.a,p.b,p.c,p.d
    return qps([x*x,1/(x*x)],q)/qps([a*x,a/x,b*x,b/x,c*x,c/x,d*x,d/x],q)
def Wt(x,p):
    q,a,b,c,d,t=p.q,p.a,p.b,p.c,p.d,p.t
    return qps([q*x/d,q/(d*x),x*x,1/(x*x)],q)/(qps([a*x,a/x,b*x,b/x,c*x,c/x],q)*theta(d*t*x,q)*theta(d*t/x,q))
def c0(p):
    q,a,b,c,d,t=p.q,p.a,p.b,p.c,p.d,p.t
    return qps([a*b,a*c,b*c,q*a/d],q)**2*theta(a*d*t,q)**2/a**2
def Kc(p):
    q,a,b,c,d,t=p.q,p.a,p.b,p.c,p.d,p.t
    return qps([a*b,a*c,b*c,q*a/d,q],q)*mp.sqrt(theta(q*t,q)*theta(a*d*t,q)*theta(b*d*t,q)*theta(c*d*t,q)/(q*a*b*c*d*t*t))
def Mc(p):
    q,a,b,c,d,t=p.q,p.a,p.b,p.c,p.d,p.t
    return theta(q*t,q)*Kc(p)/(qps([q,q],q)*theta(a*d*t,q)*theta(b*d*t,q)*theta(c*d*t,q))
def nu_plus(k,p):
    q,a,b,c,d,t=p.q,p.a,p.b,p.c,p.d,p.t
    at=p.dual().a
    return qps([q*a/d,q/(a*d),1/a**2],q)/(qps([q,a*b,b/a,a*c,c/a],q)*theta(a*d*t,q)*theta(d*t/a,q))*qps([a*a,a*b,a*c,a*d],q,k)/qps([q,q*a/b,q*a/c,q*a/d],q,k)*(1-a*a*q**(2*k))/(1-a*a)*Kc(p)/(2*at**(2*k))
def nu_minus(k,p):
    q,a,b,c,d,t=p.q,p.a,p.b,p.c,p.d,p.t
    at=p.dual().a
    return qps([q*t,q/(d*d*t)],q)/qps([q,q,a/(d*t),b/(d*t),c/(d*t),a*d*t,b*d*t,c*d*t],q)*qps([1/t,a/(d*t),b/(d*t),c/(d*t)],q,-k)/qps([q/(a*d*t),q/(b*d*t),q/(c*d*t),q/(d*d*t)],q,-k)*(1-1/(d*d*t*t*q**(2*k)))*Kc(p)*at**(2*k)/2
P1=P("0.4","0.8","0.6","0.5","2.5","-2")
