// Assignment 3 solution
#include<iostream.h>   // header files
#include<conio.h>
int main(){   // program starts here
int num,count=0;
cout<<"Enter a number: ";
cin>>num;   // read input from user
for(int i=1;i<=num;i=i+1)   // loop
{
if(num%i==0)   // check the condition
count=count+1;
}
if(count==2)
cout<<num<<" is prime";
else
cout<<num<<" is not prime";
getch();
return 0;   // end of program
}
