#include<iostream.h>
#include<conio.h>
int main(){
int num,rev=0,digit;
cout<<"Enter a number: ";
cin>>num;
for(;num>0;num=num/10)
{
digit=num%10;
rev=rev*10+digit;
}
cout<<"Reverse of the number is "<<rev<<endl;
getch();
return 0;
}
